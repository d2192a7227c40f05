#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gravnano {

struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Rk45Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double max_step = std::numeric_limits<double>::infinity();
  long max_steps = 20'000'000;
};

// Dormand-Prince 5(4) with FSAL and a PI step-size controller.
// State is a fixed-size array; the RHS functor is f(t, y, dydt).
template <int N, class F>
class AdaptiveRk45 {
 public:
  AdaptiveRk45(F f, Rk45Options opts) : f_(f), o_(opts) {}

  // Advances y in place from t to t_target, hitting t_target exactly.
  void advance(double& t, std::array<double, N>& y, double t_target) {
    if (t_target <= t) return;
    std::array<double, N> k1;
    f_(t, y, k1);
    if (!(h_ > 0.0)) h_ = initial_step(t, y, k1, t_target - t);
    double err_prev = 1.0;
    bool rejected = false;
    while (t < t_target) {
      if (++steps_ > o_.max_steps) throw IntegrationError("rk45: step budget exhausted");
      double h = std::min({h_, o_.max_step, t_target - t});
      std::array<double, N> y1, k7;
      double err = step(t, y, k1, h, y1, k7);
      if (!std::isfinite(err)) {
        h_ = h * 0.1;
        rejected = true;
        if (h_ < step_floor(t)) throw IntegrationError("rk45: non-finite state");
        continue;
      }
      if (err <= 1.0) {
        t += h;
        y = y1;
        k1 = k7;  // FSAL
        double fac = 0.9 * std::pow(err > 0 ? err : 1e-10, -0.14) * std::pow(err_prev, 0.08);
        fac = std::clamp(fac, 0.2, rejected ? 1.0 : 5.0);
        h_ = h * fac;
        err_prev = std::max(err, 1e-4);
        rejected = false;
      } else {
        double fac = std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
        h_ = h * fac;
        rejected = true;
        if (h_ < step_floor(t)) throw IntegrationError("rk45: step size underflow");
      }
    }
  }

  long steps() const { return steps_; }

 private:
  static double step_floor(double t) {
    return 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
  }

  double scale(double y0, double y1) const {
    return o_.abs_tol + o_.rel_tol * std::max(std::abs(y0), std::abs(y1));
  }

  double initial_step(double t, const std::array<double, N>& y,
                      const std::array<double, N>& f0, double span) const {
    double d0 = 0.0, d1 = 0.0;
    for (int i = 0; i < N; ++i) {
      double sc = scale(y[i], y[i]);
      d0 += (y[i] / sc) * (y[i] / sc);
      d1 += (f0[i] / sc) * (f0[i] / sc);
    }
    double h = (d1 > 0.0) ? 0.01 * std::sqrt(d0 > 0 ? d0 / d1 : 1.0 / d1) : span * 1e-4;
    if (!(h > 0.0) || !std::isfinite(h)) h = span * 1e-6;
    return std::min({h, span, o_.max_step});
  }

  // One trial step; returns the scaled error norm and fills y1 and k7 = f(t+h, y1).
  double step(double t, const std::array<double, N>& y, const std::array<double, N>& k1,
              double h, std::array<double, N>& y1, std::array<double, N>& k7) {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    std::array<double, N> k2, k3, k4, k5, k6, tmp;
    for (int i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    f_(t + h / 5, tmp, k2);
    for (int i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f_(t + 3 * h / 10, tmp, k3);
    for (int i = 0; i < N; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f_(t + 4 * h / 5, tmp, k4);
    for (int i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f_(t + 8 * h / 9, tmp, k5);
    for (int i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f_(t + h, tmp, k6);
    for (int i = 0; i < N; ++i)
      y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f_(t + h, y1, k7);

    double err2 = 0.0;
    for (int i = 0; i < N; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double r = e / scale(y[i], y1[i]);
      err2 += r * r;
    }
    return std::sqrt(err2 / N);
  }

  F f_;
  Rk45Options o_;
  double h_ = 0.0;
  long steps_ = 0;
};

}  // namespace detail
}  // namespace gravnano
