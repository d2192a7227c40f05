#include "gravnano/dynamics.hpp"

#include <array>
#include <cmath>

#include "gravnano/detail/rk45.hpp"

namespace gravnano {

GaussianScales characteristic_scale(const SphereSpec& spec, const PhysicalConstants& c) {
  double M = spec.mass_kg();
  double R = spec.radius_m;
  double k0 = c.G * M * M / (R * R * R);
  double L = std::sqrt(c.hbar / std::sqrt(k0 * M));
  return {k0, L, std::sqrt(k0 / M), M};
}

double width_m(const GaussianState& s, const GaussianScales& sc) {
  return std::sqrt(3.0) * sc.L_m / std::sqrt(2.0 * s.a);
}

double delta_x_rms_m(const GaussianState& s, const GaussianScales& sc) {
  return sc.L_m / std::sqrt(2.0 * s.a);
}

double width_param_m(const GaussianState& s, const GaussianScales& sc) {
  return sc.L_m / std::sqrt(s.a);
}

namespace {

// Dimensionless RHS in tau = omega0 t. Returns NaNs for a <= 0 so trial steps
// that leave the admissible region are rejected by the error control.
struct GaussianRhs {
  const SphereSpec* spec;
  const PhysicalConstants* c;
  const PotentialModel* model;
  GaussianScales sc;

  void operator()(double /*tau*/, const std::array<double, 3>& y,
                  std::array<double, 3>& dy) const {
    double a = y[0], b = y[1];
    if (!(a > 0.0)) {
      dy = {std::nan(""), std::nan(""), std::nan("")};
      return;
    }
    double w = std::sqrt(1.5) * sc.L_m / std::sqrt(a);
    double kk = spring_constant(w, *spec, *c, *model) / sc.k0;
    dy[0] = 2.0 * a * b;
    dy[1] = kk + b * b - a * a;
    dy[2] = 0.5 * a;
  }
};

void check_rel_tol(double rel_tol) {
  if (!(rel_tol >= 1e-13 && rel_tol <= 1e-3))
    throw std::invalid_argument("evolve: rel_tol must lie in [1e-13, 1e-3]");
}

}  // namespace

GaussianDeriv derivatives(const GaussianState& s, const SphereSpec& spec,
                          const PhysicalConstants& c, const PotentialModel& model) {
  if (!(s.a > 0.0)) throw std::invalid_argument("derivatives: a must be > 0");
  GaussianRhs rhs{&spec, &c, &model, characteristic_scale(spec, c)};
  std::array<double, 3> dy;
  rhs(0.0, {s.a, s.b, s.phase}, dy);
  double w0 = rhs.sc.omega0;
  return {dy[0] * w0, dy[1] * w0, dy[2] * w0};
}

Trajectory evolve_from(const GaussianState& initial, const SphereSpec& spec,
                       const PhysicalConstants& c, const PotentialModel& model, double t_end_s,
                       double rel_tol, int n_samples) {
  check_rel_tol(rel_tol);
  model.validate();
  if (!(initial.a > 0.0)) throw std::invalid_argument("evolve: initial a must be > 0");
  if (!(t_end_s >= 0.0)) throw std::invalid_argument("evolve: t_end must be >= 0");
  if (n_samples < 2) throw std::invalid_argument("evolve: need at least 2 samples");

  GaussianScales sc = characteristic_scale(spec, c);
  GaussianRhs rhs{&spec, &c, &model, sc};
  detail::Rk45Options opts;
  opts.rel_tol = rel_tol;
  opts.abs_tol = rel_tol;
  detail::AdaptiveRk45<3, GaussianRhs> stepper(rhs, opts);

  std::array<double, 3> y = {initial.a, initial.b, initial.phase};
  double tau = 0.0;
  double tau_end = t_end_s * sc.omega0;

  Trajectory out;
  out.samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    double tau_i = tau_end * i / (n_samples - 1);
    stepper.advance(tau, y, tau_i);
    if (!(y[0] > 0.0))
      throw IntegrationError("evolve: width parameter a reached the a <= 0 boundary");
    GaussianState s{y[0], y[1], y[2]};
    double w = width_m(s, sc);
    out.samples.push_back({tau_i / sc.omega0, w, s.a, s.b, spring_constant(w, spec, c, model),
                           effective_energy(s, spec, c, model)});
  }
  return out;
}

Trajectory evolve(const SphereSpec& spec, const PhysicalConstants& c, const PotentialModel& model,
                  double delta_x0_m, double t_end_s, double rel_tol, int n_samples) {
  if (!(delta_x0_m > 0.0)) throw std::invalid_argument("evolve: delta_x0 must be > 0");
  GaussianScales sc = characteristic_scale(spec, c);
  double a0 = (sc.L_m / delta_x0_m) * (sc.L_m / delta_x0_m);
  return evolve_from({a0, 0.0, 0.0}, spec, c, model, t_end_s, rel_tol, n_samples);
}

double effective_energy(const GaussianState& s, const SphereSpec& spec,
                        const PhysicalConstants& c, const PotentialModel& model) {
  if (!(s.a > 0.0)) throw std::invalid_argument("effective_energy: a must be > 0");
  GaussianScales sc = characteristic_scale(spec, c);
  double kinetic = 0.75 * c.hbar * c.hbar / sc.mass_kg * (s.a * s.a + s.b * s.b) /
                   (s.a * sc.L_m * sc.L_m);
  return kinetic + v_eff_antiderivative(width_m(s, sc), spec, c, model);
}

double bound_state_width(const SphereSpec& spec, const PhysicalConstants& c,
                         const PotentialModel& model) {
  model.validate();
  GaussianScales sc = characteristic_scale(spec, c);
  auto g = [&](double a) {
    double w = std::sqrt(1.5) * sc.L_m / std::sqrt(a);
    return a * a - spring_constant(w, spec, c, model) / sc.k0;
  };
  // Hyperbolic-branch estimate bounds the root for every variant; bisect log a.
  double q = spec.radius_m / (model.alpha * std::sqrt(1.5) * sc.L_m);
  double q6 = q * q * q * q * q * q;
  double hi = 4.0 * std::max(1.0, q6);
  double lo = 1e-4 * std::min(1.0, q6);
  if (!(g(lo) < 0.0) || !(g(hi) > 0.0))
    throw std::runtime_error("bound_state_width: failed to bracket the fixed point");
  double llo = std::log(lo), lhi = std::log(hi);
  for (int it = 0; it < 200; ++it) {
    double lm = 0.5 * (llo + lhi);
    if (g(std::exp(lm)) < 0.0)
      llo = lm;
    else
      lhi = lm;
  }
  double a = std::exp(0.5 * (llo + lhi));
  return std::sqrt(1.5) * sc.L_m / std::sqrt(a);
}

double stability_threshold(const SphereSpec& spec, const PhysicalConstants& c, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("stability_threshold: alpha must be > 0");
  double M = spec.mass_kg();
  return (9.0 / 8.0) * alpha * alpha * alpha * c.hbar * c.hbar / (c.G * M * M * M);
}

double free_spread(double delta_x0_m, double mass_kg, double t_s, const PhysicalConstants& c) {
  if (!(delta_x0_m > 0.0) || !(mass_kg > 0.0))
    throw std::invalid_argument("free_spread: delta_x0 and mass must be > 0");
  double r = c.hbar * t_s / (delta_x0_m * delta_x0_m * mass_kg);
  return delta_x0_m * std::sqrt(1.0 + r * r);
}

double separation_time(const SphereSpec& spec, const PhysicalConstants& c,
                       const PotentialModel& model, double delta_x0_m, double threshold_m,
                       double horizon_s, double rel_tol) {
  if (!(threshold_m > 0.0) || !(horizon_s > 0.0))
    throw std::invalid_argument("separation_time: threshold and horizon must be > 0");
  GaussianScales sc = characteristic_scale(spec, c);
  double M = sc.mass_kg;

  const int n = 1024;
  Trajectory traj = evolve(spec, c, model, delta_x0_m, horizon_s, rel_tol, n);
  auto gap_at = [&](double t, double self_width) {
    return std::sqrt(1.5) * free_spread(delta_x0_m, M, t, c) - self_width - threshold_m;
  };

  int hit = -1;
  for (int i = 0; i < n; ++i) {
    if (gap_at(traj.samples[i].t_s, traj.samples[i].width_m) >= 0.0) {
      hit = i;
      break;
    }
  }
  if (hit < 0)
    throw NoCrossingError("separation_time: no threshold crossing within horizon");
  if (hit == 0) return 0.0;

  const TrajectorySample& s0 = traj.samples[hit - 1];
  GaussianState base{s0.a, s0.b, 0.0};
  double t_lo = s0.t_s, t_hi = traj.samples[hit].t_s;
  auto self_width = [&](double t) {
    Trajectory seg = evolve_from(base, spec, c, model, t - s0.t_s, rel_tol, 2);
    return seg.samples.back().width_m;
  };
  for (int it = 0; it < 60 && (t_hi - t_lo) > 1e-9 * t_hi; ++it) {
    double tm = 0.5 * (t_lo + t_hi);
    if (gap_at(tm, self_width(tm)) < 0.0)
      t_lo = tm;
    else
      t_hi = tm;
  }
  return 0.5 * (t_lo + t_hi);
}

double confinement_bound(const SphereSpec& spec, const PhysicalConstants& c) {
  double M = spec.mass_kg();
  return std::sqrt(c.hbar * c.hbar * spec.radius_m / (1.4 * c.G * M * M * M));
}

}  // namespace gravnano
