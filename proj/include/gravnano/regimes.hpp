#pragma once

#include "gravnano/core.hpp"

namespace gravnano {

// Widths separating the four regimes, strictly ordered. The atomic boundary is
// clamped from below by the nuclear one: for very large N the raw (6/5) R / N
// falls below 2 r_nucleus and the atomic band degenerates to empty.
struct RegimeBoundaries {
  double nuclear_atomic_m;      // 2 nucleus_radius
  double atomic_mesoscopic_m;   // max(above, (6/5) R / N)
  double mesoscopic_quantum_m;  // 2 R
};

RegimeBoundaries regime_boundaries(const SphereSpec& spec);
Regime classify(double width_m, const SphereSpec& spec);

// Radius where the hyperbolic bound-state scale hbar^2/(G M^3) equals R for a
// sphere of the given density: (hbar^2 / (G rho^3 (4 pi/3)^3))^{1/10}.
double mesoscopic_radius(double density_kg_m3, const PhysicalConstants& c);

struct CriticalAtomNumbers {
  double atomic;   // sqrt(hbar^2 / (G m^3 delta))
  double nuclear;  // atomic * sqrt(delta / r_nucleus)
};

CriticalAtomNumbers critical_atom_numbers(const SphereSpec& spec, const PhysicalConstants& c);

// Localization width (1.14)^3 hbar^2/(G M^3) below which self-gravity beats
// quantum spreading in van Meter's criterion.
double van_meter_threshold(const SphereSpec& spec, const PhysicalConstants& c);

// Minimal decoherence rate density that masks self-gravity: G^4 M^11 / hbar^7
// in the quantum regime (width > 2R), G M^2 / (R^3 hbar) otherwise.
double lambda_crit(double width_m, const SphereSpec& spec, const PhysicalConstants& c);

// Environmental rate density gamma * alpha_loc.
double lambda_deco(double gamma, double alpha_loc);

// hbar^3 / (0.163 G^2 M^5): characteristic gravitational collapse time.
double dp_collapse_time(const SphereSpec& spec, const PhysicalConstants& c);

// (6 G M^2 t / (5 hbar R))^2: bound on CM/relative entanglement generated by
// the sphere's own gravity after time t.
double entanglement_bound(double t_s, const SphereSpec& spec, const PhysicalConstants& c);

struct RegimeReport {
  Regime label;
  double width_m;
  RegimeBoundaries boundaries;
  double mesoscopic_radius_m;
  double n_c_atomic;
  double n_c_nuclear;
  double van_meter_width_m;
  double lambda_crit_per_m2_s;
  double dp_collapse_time_s;
  double entanglement_bound_300s;
  double entanglement_bound_1200s;
};

RegimeReport regime_report(double width_m, const SphereSpec& spec, const PhysicalConstants& c);

}  // namespace gravnano
