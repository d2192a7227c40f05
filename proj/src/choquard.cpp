#include "gravnano/choquard.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace gravnano {

namespace {

constexpr double kBlowup = 1e8;

// Numeric convention: phi'' + 2 phi'/r = 2 (U - E) phi, U'' + 2 U'/r = phi^2,
// with phi(0) = 1, U(0) = 0. Shift and dilation freedom are fixed afterwards.
struct ShootResult {
  int nodes = 0;
  bool blew_up = false;
  std::vector<double> phi, dphi, u;
};

ShootResult shoot(double e, double h, long steps, int stop_after_nodes, bool keep) {
  ShootResult res;
  if (keep) {
    res.phi.reserve(steps);
    res.dphi.reserve(steps);
    res.u.reserve(steps);
  }

  // Series start at r = h from the regular expansion about the origin.
  double r = h;
  double y0 = 1.0 - e * h * h / 3.0;
  double y1 = -2.0 * e * h / 3.0;
  double y2 = h * h / 6.0;
  double y3 = h / 3.0;

  auto rhs = [e](double rr, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = 2.0 * (y[2] - e) * y[0] - 2.0 * y[1] / rr;
    dy[2] = y[3];
    dy[3] = y[0] * y[0] - 2.0 * y[3] / rr;
  };

  double prev = y0;
  for (long i = 0;; ++i) {
    if (keep) {
      res.phi.push_back(y0);
      res.dphi.push_back(y1);
      res.u.push_back(y2);
    }
    if (y0 * prev < 0.0) ++res.nodes;
    prev = y0;
    if (std::abs(y0) > kBlowup) {
      res.blew_up = true;
      break;
    }
    if (stop_after_nodes >= 0 && res.nodes > stop_after_nodes) break;
    if (i + 1 >= steps) break;

    double y[4] = {y0, y1, y2, y3};
    double k1[4], k2[4], k3[4], k4[4], tmp[4];
    rhs(r, y, k1);
    for (int j = 0; j < 4; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
    rhs(r + 0.5 * h, tmp, k2);
    for (int j = 0; j < 4; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
    rhs(r + 0.5 * h, tmp, k3);
    for (int j = 0; j < 4; ++j) tmp[j] = y[j] + h * k3[j];
    rhs(r + h, tmp, k4);
    y0 = y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y1 = y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    y2 = y[2] + h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
    y3 = y[3] + h / 6.0 * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3]);
    r += h;
  }
  return res;
}

double simpson_uniform(const std::vector<double>& f, std::size_t m, double h) {
  // Composite Simpson over indices [0, m]; m must be even.
  double s = f[0] + f[m];
  for (std::size_t i = 1; i < m; ++i) s += f[i] * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

ChoquardState shoot_state(int n, RadialGrid grid, int n_max) {
  if (n < 0 || n > n_max) throw std::invalid_argument("shoot_state: node count out of range");
  double r_max = grid.r_max > 0.0 ? grid.r_max : 30.0 + 22.0 * n;
  long steps = grid.steps > 0 ? grid.steps : std::lround(r_max / 0.004);
  if (steps < 100) throw std::invalid_argument("shoot_state: grid too coarse");
  double h = r_max / steps;

  auto nodes_of = [&](double e) { return shoot(e, h, steps, n, false).nodes; };

  // nodes(E) is a nondecreasing step function; E_n sits at the jump n -> n+1.
  double e_lo = 1e-6;
  if (nodes_of(e_lo) > n) throw ShootingError("shoot_state: lower bracket already oscillates");
  double e_hi = 1.0;
  int guard = 0;
  while (nodes_of(e_hi) <= n) {
    e_hi *= 2.0;
    if (++guard > 60) throw ShootingError("shoot_state: failed to bracket the eigenvalue");
  }
  for (int it = 0; it < 200 && (e_hi - e_lo) > 1e-15 * e_hi; ++it) {
    double em = 0.5 * (e_lo + e_hi);
    (nodes_of(em) <= n ? e_lo : e_hi) = em;
  }
  // The final pass runs on the nodes <= n side, whose tail diverges without a
  // spurious far-field crossing.
  double e_shoot = e_lo;

  ShootResult fin = shoot(e_shoot, h, steps, -1, true);
  std::size_t m = fin.phi.size();
  if (m < 16) throw ShootingError("shoot_state: solution blew up immediately");

  // Cut the diverging tail at the flattest point past the last sign change.
  std::size_t last_sc = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (fin.phi[i - 1] * fin.phi[i] < 0.0) last_sc = i;
  std::size_t icut = last_sc;
  for (std::size_t i = last_sc; i < m; ++i)
    if (std::abs(fin.phi[i]) < std::abs(fin.phi[icut])) icut = i;
  if (icut < 16) throw ShootingError("shoot_state: tail cut collapsed to the origin");
  if (icut % 2) --icut;

  int nodes_kept = 0;
  for (std::size_t i = 1; i <= icut; ++i)
    if (fin.phi[i - 1] * fin.phi[i] < 0.0) ++nodes_kept;
  if (nodes_kept != n)
    throw ShootingError("shoot_state: node count mismatch after tail cut, refine the grid");

  auto r_at = [h](std::size_t i) { return (i + 1) * h; };
  double r_cut = r_at(icut);

  std::vector<double> f(icut + 1);
  for (std::size_t i = 0; i <= icut; ++i) {
    double rr = r_at(i);
    f[i] = fin.phi[i] * fin.phi[i] * rr * rr;
  }
  double i2 = simpson_uniform(f, icut, h) + h * h * h / 3.0;

  double c_anchor = fin.u[icut] + i2 / r_cut;

  for (std::size_t i = 0; i <= icut; ++i) {
    double rr = r_at(i);
    f[i] = fin.dphi[i] * fin.dphi[i] * rr * rr;
  }
  double dphi0 = 2.0 * e_shoot / 3.0;
  double i_kin = simpson_uniform(f, icut, h) + dphi0 * dphi0 * std::pow(h, 5) / 5.0;

  for (std::size_t i = 0; i <= icut; ++i) {
    double rr = r_at(i);
    f[i] = (fin.u[i] - c_anchor) * fin.phi[i] * fin.phi[i] * rr * rr;
  }
  double i_pot = simpson_uniform(f, icut, h) - c_anchor * h * h * h / 3.0;

  // Dilate so the normalized profile has unit norm; energies scale with 1/I2^2
  // pointwise and the integrals pick up a further 1/I2.
  double lam2 = 1.0 / (i2 * i2);
  ChoquardState st;
  st.n = n;
  st.e_n = -(e_shoot - c_anchor) * lam2;
  st.e_kinetic = 0.5 * i_kin * lam2 / i2;
  st.e_potential = 0.5 * i_pot * lam2 / i2;
  st.e_total = st.e_kinetic + st.e_potential;
  st.norm = 1.0;
  st.r_cut = r_cut * i2;
  st.r.resize(icut + 1);
  st.phi.resize(icut + 1);
  st.u.resize(icut + 1);
  for (std::size_t i = 0; i <= icut; ++i) {
    st.r[i] = r_at(i) * i2;
    st.phi[i] = fin.phi[i] * lam2;
    st.u[i] = (fin.u[i] - c_anchor) * lam2;
  }
  return st;
}

VirialReport virial_check(const ChoquardState& s) {
  VirialReport rep;
  rep.r1 = std::abs(2.0 * s.e_kinetic + s.e_potential) / std::abs(s.e_potential);
  rep.r2 = std::abs(s.e_n - 3.0 * s.e_kinetic) / s.e_n;
  rep.r3 = std::abs(s.e_total + s.e_n / 3.0) / (s.e_n / 3.0);
  return rep;
}

double binding_energy_si(const ChoquardState& s, double mass_kg, const PhysicalConstants& c) {
  if (!(mass_kg > 0.0)) throw std::invalid_argument("binding_energy_si: mass must be > 0");
  double gm = c.G * mass_kg;
  return s.e_n * gm * gm * std::pow(mass_kg, 3) / (c.hbar * c.hbar);
}

SpectrumFit spectrum_fit(const std::vector<double>& e_levels) {
  std::size_t n = e_levels.size();
  if (n < 4) throw std::invalid_argument("spectrum_fit: need at least 4 levels");
  for (double e : e_levels)
    if (!(e > 0.0)) throw std::invalid_argument("spectrum_fit: levels must be > 0");

  // Model e_k = a (k + b)^(-c), solved by Gauss-Newton on log residuals.
  double log_a = std::log(e_levels[0]);
  double b = 0.75, cc = 2.0;
  Eigen::MatrixXd J(n, 3);
  Eigen::VectorXd r(n);
  for (int it = 0; it < 100; ++it) {
    for (std::size_t k = 0; k < n; ++k) {
      double base = k + b;
      r(k) = log_a - cc * std::log(base) - std::log(e_levels[k]);
      J(k, 0) = 1.0;
      J(k, 1) = -cc / base;
      J(k, 2) = -std::log(base);
    }
    Eigen::Vector3d step = (J.transpose() * J).ldlt().solve(J.transpose() * r);
    log_a -= step(0);
    b -= step(1);
    cc -= step(2);
    if (!(b > 0.0)) throw ShootingError("spectrum_fit: offset parameter left the model domain");
    if (step.norm() < 1e-13) break;
  }
  for (std::size_t k = 0; k < n; ++k)
    r(k) = log_a - cc * std::log(k + b) - std::log(e_levels[k]);
  return {std::exp(log_a), b, cc, std::sqrt(r.squaredNorm() / n)};
}

DiosiGroundState diosi_ground_state(const SphereSpec& spec, const PhysicalConstants& c) {
  double m = spec.mass_kg();
  double r = spec.radius_m;
  double k0 = c.G * m * m / (r * r * r);
  double omega0 = std::sqrt(k0 / m);
  DiosiGroundState g;
  g.width_m = std::pow(c.hbar * c.hbar / (c.G * m * m * m), 0.25) * std::pow(r, 0.75);
  g.e_osc_J = 1.5 * c.hbar * omega0;
  g.cal_e_J = 2.25 * c.hbar * omega0;
  g.e_kinetic_J = 0.75 * c.hbar * omega0;
  g.e_harmonic_J = 0.75 * c.hbar * omega0;
  g.e_total_J = g.e_osc_J;
  return g;
}

}  // namespace gravnano
