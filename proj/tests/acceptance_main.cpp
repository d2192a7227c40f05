// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gravnano/choquard.hpp"
#include "gravnano/dynamics.hpp"
#include "gravnano/lattice.hpp"
#include "gravnano/potentials.hpp"
#include "gravnano/regimes.hpp"

using namespace gravnano;

namespace {

int g_failures = 0;

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <class F>
void criterion(int id, const char* desc, F f) {
  bool ok = false;
  std::string note;
  try {
    ok = f();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  std::printf("C%02d %s %s%s\n", id, ok ? "PASS" : "FAIL", desc, note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

SphereSpec silica(double r) { return {r, 2650.0, 3.3e-10, 5e-12, 9.96e-26}; }

// unit system G = M = hbar = R = 1
const PhysicalConstants kUnit{1.0, 1.0};
const SphereSpec kUnitSphere{1.0, 3.0 / (4.0 * 3.14159265358979323846), 1e-3, 1e-5, 1e-6};

bool c1_oracle() {
  double t0 = now_s();
  PhysicalConstants c;
  SphereSpec spec = silica(1e-7);
  double R = spec.radius_m;
  for (double f : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 10.0}) {
    double d = f * R;
    double v = v_eff_sphere(d, spec, c);
    QuadratureResult q = v_eff_sphere_quadrature(d, spec, c, 100000);
    if (!q.within_tolerance) return false;
    if (rel(v, q.value) > 1e-6) return false;
  }
  return now_s() - t0 < 10.0;
}

bool c2_smoothness() {
  auto f = [](double x) { return v_eff_sphere(x, kUnitSphere, kUnit); };
  // value continuity across the branch switch
  if (std::abs(f(2.0 * (1.0 - 1e-12)) - f(2.0 * (1.0 + 1e-12))) > 1e-9) return false;

  const double x0 = 2.0;
  const double truth[3] = {0.25, -0.25, 0.375};
  const double band[3] = {1e-3, 5e-3, 2e-2};
  double mismatch[2][3];
  const double hs[2] = {0.02, 0.01};
  for (int hi = 0; hi < 2; ++hi) {
    double h = hs[hi];
    auto fm = [&](int k) { return f(x0 - k * h); };
    auto fp = [&](int k) { return f(x0 + k * h); };
    // second-order one-sided stencils, orders 1..3
    double L[3], Rr[3];
    L[0] = (3.0 * fm(0) - 4.0 * fm(1) + fm(2)) / (2.0 * h);
    Rr[0] = (-3.0 * fp(0) + 4.0 * fp(1) - fp(2)) / (2.0 * h);
    L[1] = (2.0 * fm(0) - 5.0 * fm(1) + 4.0 * fm(2) - fm(3)) / (h * h);
    Rr[1] = (2.0 * fp(0) - 5.0 * fp(1) + 4.0 * fp(2) - fp(3)) / (h * h);
    L[2] = (2.5 * fm(0) - 9.0 * fm(1) + 12.0 * fm(2) - 7.0 * fm(3) + 1.5 * fm(4)) / (h * h * h);
    Rr[2] = (-2.5 * fp(0) + 9.0 * fp(1) - 12.0 * fp(2) + 7.0 * fp(3) - 1.5 * fp(4)) / (h * h * h);
    for (int k = 0; k < 3; ++k) {
      mismatch[hi][k] = std::abs(L[k] - Rr[k]);
      if (std::abs(L[k] - truth[k]) > band[k]) return false;
      if (std::abs(Rr[k] - truth[k]) > band[k]) return false;
    }
  }
  // one-sided mismatch shrinks like ~h^2 (allow slack plus a rounding floor)
  for (int k = 0; k < 3; ++k)
    if (mismatch[1][k] > 0.5 * mismatch[0][k] + 1e-9) return false;

  // fourth derivative jumps; fifth one-sided values differ as well
  double h = 0.01;
  auto fm = [&](int k) { return f(x0 - k * h); };
  auto fp = [&](int k) { return f(x0 + k * h); };
  double h4 = h * h * h * h;
  double d4l = (3.0 * fm(0) - 14.0 * fm(1) + 26.0 * fm(2) - 24.0 * fm(3) + 11.0 * fm(4) -
                2.0 * fm(5)) / h4;
  double d4r = (3.0 * fp(0) - 14.0 * fp(1) + 26.0 * fp(2) - 24.0 * fp(3) + 11.0 * fp(4) -
                2.0 * fp(5)) / h4;
  if (std::abs(d4l - 1.5) > 0.3) return false;
  if (std::abs(d4r + 0.75) > 0.3) return false;
  double jump = std::abs(d4l - d4r);
  if (jump < 2.0 || jump > 2.5) return false;

  double h5 = h4 * h;
  double d5l =
      (fm(0) - 5.0 * fm(1) + 10.0 * fm(2) - 10.0 * fm(3) + 5.0 * fm(4) - fm(5)) / h5;
  double d5r =
      (fp(5) - 5.0 * fp(4) + 10.0 * fp(3) - 10.0 * fp(2) + 5.0 * fp(1) - fp(0)) / h5;
  return std::abs(d5l - 0.75) < 0.15 && std::abs(d5r - 1.875) < 0.25;
}

bool c3_counts() {
  double t0 = now_s();
  if (generate_lattice_sphere(5.0 * 3.3e-10, 3.3e-10).atom_count() != 515) return false;
  if (generate_lattice_sphere(10.0 * 3.3e-10, 3.3e-10).atom_count() != 4169) return false;
  return now_s() - t0 < 1.0;
}

bool c4_plateau() {
  double t0 = now_s();
  PhysicalConstants c;
  double delta = 3.3e-10, m = 9.96e-26;
  LatticeSphere lat10 = generate_lattice_sphere(10.0 * delta, delta);
  auto mid = normalized_profile(lat10, {0.5}, m, c);
  if (std::abs(mid[0].v_over_vd - 1.0) > 0.02) return false;

  LatticeSphere lat5 = generate_lattice_sphere(5.0 * delta, delta);
  auto ends = normalized_profile(lat5, {1e-5, 1.0 - 1e-5}, m, c);
  double d0 = ends[0].v_over_vd, s0 = ends[0].schmidt_over_vd;
  if (std::abs(d0 - s0) > 5.0 || d0 < 100.0) return false;
  if (ends[1].v_over_vd < std::max(100.0, 0.5 * s0)) return false;
  return now_s() - t0 < 60.0;
}

bool c5_ground_state() {
  double t0 = now_s();
  ChoquardState st = shoot_state(0);
  if (std::abs(st.e_n - 0.163) > 0.005) return false;
  if (st.e_n < 0.146 || st.e_n > 0.36) return false;
  if (std::abs(2.0 * st.e_kinetic + st.e_potential) / st.e_kinetic > 1e-3) return false;
  return now_s() - t0 < 120.0;
}

bool c6_spectrum() {
  double t0 = now_s();
  std::vector<double> levels;
  for (int n = 0; n <= 4; ++n) levels.push_back(shoot_state(n).e_n);
  SpectrumFit fit = spectrum_fit(levels);
  if (std::abs(fit.a - 0.096) > 0.01) return false;
  if (std::abs(fit.b - 0.76) > 0.02) return false;
  if (std::abs(fit.c - 2.00) > 0.05) return false;
  return now_s() - t0 < 600.0;
}

bool c7_bound_widths() {
  PhysicalConstants c;
  SphereSpec spec = silica(1e-7);
  PotentialModel hyp{PotentialModel::Variant::HyperbolicOnly, 1.0};
  double m = spec.mass_kg();
  double exact = 2.25 * c.hbar * c.hbar / (c.G * m * m * m);
  if (rel(bound_state_width(spec, c, hyp), exact) > 1e-10) return false;

  // width-equals-radius crossing of the piecewise model
  PotentialModel pw;
  double lo = 1e-8, hi = 1e-6;
  for (int i = 0; i < 80; ++i) {
    double mid = std::sqrt(lo * hi);
    double lattice = std::min(3.3e-10, mid / 4.0);
    SphereSpec ss(mid, 2650.0, lattice, lattice / 100.0, 9.96e-26);
    (bound_state_width(ss, c, pw) > mid ? lo : hi) = mid;
  }
  double r_star = std::sqrt(lo * hi);
  return r_star > 0.8e-7 && r_star < 1.2e-7;
}

bool c8_energy_drift() {
  PhysicalConstants c;
  Trajectory tr = evolve(silica(1e-7), c, PotentialModel{}, 1e-7, 1e4, 1e-10, 512);
  double e0 = tr.samples.front().e_eff_J;
  double worst = 0.0;
  for (const auto& s : tr.samples) worst = std::max(worst, std::abs(s.e_eff_J - e0));
  return worst / std::abs(e0) < 100.0 * 1e-10;
}

bool c9_free_spread() {
  PhysicalConstants c;
  std::mt19937 rng(20240814);
  std::uniform_real_distribution<double> log_mass(std::log(1e-18), std::log(1e-14));
  std::uniform_real_distribution<double> log_spread(std::log(1e-9), std::log(1e-6));
  PotentialModel free_ish{PotentialModel::Variant::HyperbolicOnly, 1e10};
  const double rel_tol = 1e-10;
  for (int trial = 0; trial < 50; ++trial) {
    double mass = std::exp(log_mass(rng));
    double dx0 = std::exp(log_spread(rng));
    SphereSpec spec;
    spec.radius_m = 1e-7;
    spec.density_kg_m3 = mass / ((4.0 / 3.0) * 3.14159265358979323846 * 1e-21);
    double horizon = 10.0 * dx0 * dx0 * mass / c.hbar;
    Trajectory tr = evolve(spec, c, free_ish, dx0, horizon, rel_tol, 128);
    for (const auto& s : tr.samples) {
      double expect = std::sqrt(1.5) * free_spread(dx0, mass, s.t_s, c);
      if (std::abs(s.width_m / expect - 1.0) > rel_tol) return false;
    }
  }
  return true;
}

bool c10_separation_times() {
  PhysicalConstants c;
  PotentialModel pw;
  double t0 = now_s();
  double t6 = separation_time(silica(1e-6), c, pw, 1e-11, 1e-7, 3000.0, 1e-10);
  if (now_s() - t0 > 60.0) return false;
  if (std::abs(t6 - 970.0) > 0.15 * 970.0) return false;

  t0 = now_s();
  SphereSpec dense(1e-5, 20000.0, 3.3e-10, 5e-12, 9.96e-26);
  double t7 = separation_time(dense, c, pw, 1e-15, 1e-7, 3000.0, 1e-10);
  if (now_s() - t0 > 60.0) return false;
  return std::abs(t7 - 410.0) <= 0.15 * 410.0;
}

bool c11_dichotomy() {
  PotentialModel hyp{PotentialModel::Variant::HyperbolicOnly, 1.0};
  double a0_len = 2.0 * stability_threshold(kUnitSphere, kUnit, 1.0) / std::sqrt(1.5);
  for (double frac : {0.25, 0.6}) {
    Trajectory tr = evolve(kUnitSphere, kUnit, hyp, frac * a0_len, 150.0, 1e-10, 600);
    double w0 = tr.samples.front().width_m;
    double wmax = 0.0;
    for (const auto& s : tr.samples) wmax = std::max(wmax, s.width_m);
    double wend = tr.samples.back().width_m;
    double e = tr.samples.front().e_eff_J;
    if (frac < 0.5) {
      // below half the critical length: positive energy, runaway spreading
      if (!(e > 0.0)) return false;
      if (!(wmax > 10.0 * w0)) return false;
      if (!(wend > 0.99 * wmax)) return false;
    } else {
      // above: negative energy, width bounded by G M^2 / |E|
      if (!(e < 0.0)) return false;
      if (!(wmax <= 1.0 / -e)) return false;
      if (!(wmax < 10.0 * w0)) return false;
    }
  }
  return true;
}

bool c12_regime_scales() {
  PhysicalConstants c;
  double meso = mesoscopic_radius(2650.0, c);
  if (meso < 0.9e-7 || meso > 1.2e-7) return false;

  SphereSpec water(1e-7, 1000.0, 1e-10, 5e-12, 3e-26);
  CriticalAtomNumbers nc = critical_atom_numbers(water, c);
  if (nc.atomic < 1e14 / 5.0 || nc.atomic > 5.0 * 1e14) return false;
  double ratio = std::sqrt(water.lattice_constant_m / water.nucleus_radius_m);
  if (rel(nc.nuclear / nc.atomic, ratio) > 1e-12) return false;

  SphereSpec transition(mesoscopic_radius(2000.0, c), 2000.0, 3.3e-10, 5e-12, 9.96e-26);
  double t_dp = dp_collapse_time(transition, c);
  return t_dp > 2e3 && t_dp < 5e4;
}

bool c13_entanglement() {
  PhysicalConstants c;
  SphereSpec spec(1e-7, 2000.0, 3.3e-10, 5e-12, 9.96e-26);
  return entanglement_bound(1200.0, spec, c) < 1.0 &&
         entanglement_bound(300.0, spec, c) <= 0.06;
}

}  // namespace

int main() {
  criterion(1, "sphere potential matches the slice quadrature oracle at seven separations", c1_oracle);
  criterion(2, "contact junction: value and derivatives 1-3 continuous, 4th jumps by ~2.25 GM^2/R^5, 5th one-sided 3/4 and 15/8", c2_smoothness);
  criterion(3, "lattice spheres hold exactly 515 sites at R=5d and 4169 at R=10d", c3_counts);
  criterion(4, "lattice profile: unit plateau at x=0.5 (R=10d), Schmidt-like divergence at both ends", c4_plateau);
  criterion(5, "ground state e0 = 0.163 +- 0.005 with virial residual < 1e-3", c5_ground_state);
  criterion(6, "five-level spectrum fit lands inside the a, b, c boxes", c6_spectrum);
  criterion(7, "hyperbolic bound width = (9/4) hbar^2/(G M^3); width-equals-radius crossing near 1e-7 m", c7_bound_widths);
  criterion(8, "effective energy drift < 100 x rel_tol over 1e4 s for the 100 nm run", c8_energy_drift);
  criterion(9, "spring off: ODE spread tracks the free closed form within rel_tol, 50 random setups", c9_free_spread);
  criterion(10, "separation times 970 s +- 15% (1 um) and 410 s +- 15% (10 um dense)", c10_separation_times);
  criterion(11, "stability dichotomy across half the critical length", c11_dichotomy);
  criterion(12, "regime scales: mesoscopic radius, critical atom numbers, collapse time", c12_regime_scales);
  criterion(13, "entanglement bound < 1 at 1200 s and <= 0.06 at 300 s", c13_entanglement);

  std::printf("acceptance: %d/13 passed\n", 13 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
