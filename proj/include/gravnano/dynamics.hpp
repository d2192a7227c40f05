#pragma once

#include <vector>

#include "gravnano/core.hpp"
#include "gravnano/potentials.hpp"

namespace gravnano {

// Scales of the self-gravity oscillator: k0 = GM^2/R^3, L = sqrt(hbar/sqrt(k0 M)),
// omega0 = sqrt(k0/M). L equals the ground-state width parameter of the k0 well.
struct GaussianScales {
  double k0;       // J/m^2
  double L_m;      // m
  double omega0;   // rad/s
  double mass_kg;  // kg
};

GaussianScales characteristic_scale(const SphereSpec& spec, const PhysicalConstants& c);

// Isotropic Gaussian wave packet exp(-(a + i b) u^2 / (2 L^2)) per axis, phase
// the accumulated e^{-i phase} factor. a > 0; a -> 0+ during integration is a
// failure, not a state.
struct GaussianState {
  double a;
  double b;
  double phase;
};

// 3D width sqrt(<r^2>) = sqrt(3) L / sqrt(2a).
double width_m(const GaussianState& s, const GaussianScales& sc);
// Per-axis rms spread sqrt(<u^2>) = L / sqrt(2a).
double delta_x_rms_m(const GaussianState& s, const GaussianScales& sc);
// Per-axis Gaussian width parameter L/sqrt(a); |psi|^2 ~ exp(-u^2/wp^2). This is
// the delta_x convention of free_spread and of evolve's initial spread.
double width_param_m(const GaussianState& s, const GaussianScales& sc);

struct GaussianDeriv {
  double da_dt;      // 1/s
  double db_dt;      // 1/s
  double dphase_dt;  // rad/s
};

// da/dt = 2ab w0, db/dt = (k/k0 + b^2 - a^2) w0, dphase/dt = (a/2) w0, with
// k re-evaluated from the current width on every call.
GaussianDeriv derivatives(const GaussianState& s, const SphereSpec& spec,
                          const PhysicalConstants& c, const PotentialModel& model);

struct TrajectorySample {
  double t_s;
  double width_m;   // sqrt(<r^2>)
  double a;
  double b;
  double k_J_m2;    // spring constant at this width
  double e_eff_J;   // conserved effective energy
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

// Adaptive RK45 (Dormand-Prince, PI controller) on the dimensionless system in
// tau = omega0 t. rel_tol must lie in [1e-13, 1e-3]. delta_x0_m is the initial
// per-axis width parameter (real Gaussian, b = 0).
Trajectory evolve(const SphereSpec& spec, const PhysicalConstants& c, const PotentialModel& model,
                  double delta_x0_m, double t_end_s, double rel_tol, int n_samples = 512);
Trajectory evolve_from(const GaussianState& initial, const SphereSpec& spec,
                       const PhysicalConstants& c, const PotentialModel& model, double t_end_s,
                       double rel_tol, int n_samples = 512);

// Kinetic (3 hbar^2 / 4M) (a^2 + b^2)/(a L^2) plus the model's v_eff_antiderivative
// at the current width; conserved along evolve trajectories.
double effective_energy(const GaussianState& s, const SphereSpec& spec,
                        const PhysicalConstants& c, const PotentialModel& model);

// Stationary width solving a^2 = k(width(a))/k0 with b = 0, by bisection.
// HyperbolicOnly: exactly (9/4) alpha^3 hbar^2/(G M^3).
double bound_state_width(const SphereSpec& spec, const PhysicalConstants& c,
                         const PotentialModel& model);

// Width sqrt(<r^2>) below which a real Gaussian has positive effective energy
// under HyperbolicOnly(alpha): (9/8) alpha^3 hbar^2/(G M^3).
double stability_threshold(const SphereSpec& spec, const PhysicalConstants& c, double alpha);

// Free-particle width parameter delta_x0 sqrt(1 + (hbar t/(delta_x0^2 M))^2).
double free_spread(double delta_x0_m, double mass_kg, double t_s, const PhysicalConstants& c);

struct NoCrossingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// First time the 3D-width gap between the free and the self-gravitating packet
// (same initial real Gaussian) reaches threshold_m; bisected to ~1e-6 relative.
// Throws NoCrossingError if the gap stays below threshold within horizon_s.
double separation_time(const SphereSpec& spec, const PhysicalConstants& c,
                       const PotentialModel& model, double delta_x0_m, double threshold_m,
                       double horizon_s, double rel_tol);

// Largest initial spread that keeps the packet trapped per the structure-
// corrected barrier: sqrt(hbar^2 R / (1.4 G M^3)).
double confinement_bound(const SphereSpec& spec, const PhysicalConstants& c);

}  // namespace gravnano
