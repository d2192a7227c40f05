#pragma once

#include <Eigen/Core>
#include <vector>

#include "gravnano/core.hpp"

namespace gravnano {

struct ShootingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RadialGrid {
  double r_max = 0.0;  // 0 -> 30 + 22 n
  int steps = 0;       // 0 -> r_max / 0.004
};

// Radial bound state of the stationary self-gravitating (Choquard) problem in
// units G = M = hbar = 1, rescaled to unit norm N = int |phi|^2 d^3x = 1.
// Energies follow the virial pattern 2 E_K + E_P = 0, calE = 3 E_K,
// E_total = -calE/3 for converged states.
struct ChoquardState {
  int n = 0;            // radial node count
  double e_n = 0.0;     // binding eigenvalue calE_n, in G^2 M^5 / hbar^2
  double e_kinetic = 0.0;
  double e_potential = 0.0;
  double e_total = 0.0;
  double norm = 1.0;
  double r_cut = 0.0;   // tail cut radius of the rescaled profile
  Eigen::ArrayXd r;     // rescaled radial grid
  Eigen::ArrayXd phi;   // rescaled wave function (4 pi int phi^2 r^2 dr = 4 pi... see impl)
  Eigen::ArrayXd u;     // rescaled potential, Coulomb-anchored (u -> -N_partial/r)
};

// Two-sided node-count bisection on the shooting eigenvalue; phi(0) fixed by the
// scaling symmetry, u anchored by its Coulomb tail after convergence.
// 0 <= n <= n_max (default 6).
ChoquardState shoot_state(int n, RadialGrid grid = {}, int n_max = 6);

struct VirialReport {
  double r1;  // |2 E_K + E_P| / |E_P|
  double r2;  // |calE - 3 E_K| / calE        (N = 1)
  double r3;  // |E_total + calE/3| / (calE/3)
};

VirialReport virial_check(const ChoquardState& s);

// calE_n in joules for a sphere of mass M: e_n G^2 M^5 / hbar^2.
double binding_energy_si(const ChoquardState& s, double mass_kg, const PhysicalConstants& c);

struct SpectrumFit {
  double a, b, c;
  double rms_log_residual;
};

// Least-squares fit of e_n = a/(n+b)^c in log space (Gauss-Newton); needs at
// least 4 levels.
SpectrumFit spectrum_fit(const std::vector<double>& e_levels);

// Ground state of the Diosi harmonic regime (width below the sphere radius):
// Gaussian of width parameter A = (hbar^2/(G M^3))^{1/4} R^{3/4} in the k0 well.
struct DiosiGroundState {
  double width_m;       // A
  double e_osc_J;       // (3/2) hbar sqrt(G M / R^3)
  double cal_e_J;       // (9/4) hbar sqrt(G M / R^3) = (3/2) e_osc
  double e_kinetic_J;   // e_osc / 2
  double e_harmonic_J;  // e_osc / 2 (equipartition partner)
  double e_total_J;     // 2 e_kinetic = (2/3) cal_e
};

DiosiGroundState diosi_ground_state(const SphereSpec& spec, const PhysicalConstants& c);

}  // namespace gravnano
