#include "gravnano/regimes.hpp"

#include <cmath>
#include <numbers>

namespace gravnano {

RegimeBoundaries regime_boundaries(const SphereSpec& spec) {
  spec.validate();
  double b_nuc = 2.0 * spec.nucleus_radius_m;
  double b_atom = std::max(b_nuc, 1.2 * spec.radius_m / spec.atom_count());
  return {b_nuc, b_atom, 2.0 * spec.radius_m};
}

Regime classify(double width_m, const SphereSpec& spec) {
  if (!(width_m > 0.0)) throw std::invalid_argument("classify: width must be > 0");
  RegimeBoundaries b = regime_boundaries(spec);
  if (width_m <= b.nuclear_atomic_m) return Regime::Nuclear;
  if (width_m <= b.atomic_mesoscopic_m) return Regime::Atomic;
  if (width_m <= b.mesoscopic_quantum_m) return Regime::Mesoscopic;
  return Regime::Quantum;
}

double mesoscopic_radius(double density_kg_m3, const PhysicalConstants& c) {
  if (!(density_kg_m3 > 0.0)) throw std::invalid_argument("mesoscopic_radius: density must be > 0");
  double vol_factor = 4.0 * std::numbers::pi / 3.0;
  double num = c.hbar * c.hbar;
  double den = c.G * std::pow(density_kg_m3, 3) * std::pow(vol_factor, 3);
  return std::pow(num / den, 0.1);
}

CriticalAtomNumbers critical_atom_numbers(const SphereSpec& spec, const PhysicalConstants& c) {
  spec.validate();
  double m = spec.atom_mass_kg;
  double atomic = std::sqrt(c.hbar * c.hbar / (c.G * m * m * m * spec.lattice_constant_m));
  double nuclear = atomic * std::sqrt(spec.lattice_constant_m / spec.nucleus_radius_m);
  return {atomic, nuclear};
}

double van_meter_threshold(const SphereSpec& spec, const PhysicalConstants& c) {
  double m = spec.mass_kg();
  return 1.14 * 1.14 * 1.14 * c.hbar * c.hbar / (c.G * m * m * m);
}

double lambda_crit(double width_m, const SphereSpec& spec, const PhysicalConstants& c) {
  if (!(width_m > 0.0)) throw std::invalid_argument("lambda_crit: width must be > 0");
  double m = spec.mass_kg();
  if (width_m > 2.0 * spec.radius_m)
    return std::pow(c.G, 4) * std::pow(m, 11) / std::pow(c.hbar, 7);
  return c.G * m * m / (std::pow(spec.radius_m, 3) * c.hbar);
}

double lambda_deco(double gamma, double alpha_loc) {
  if (!(gamma >= 0.0) || !(alpha_loc >= 0.0))
    throw std::invalid_argument("lambda_deco: rates must be >= 0");
  return gamma * alpha_loc;
}

double dp_collapse_time(const SphereSpec& spec, const PhysicalConstants& c) {
  double m = spec.mass_kg();
  return std::pow(c.hbar, 3) / (0.163 * c.G * c.G * std::pow(m, 5));
}

double entanglement_bound(double t_s, const SphereSpec& spec, const PhysicalConstants& c) {
  if (!(t_s >= 0.0)) throw std::invalid_argument("entanglement_bound: time must be >= 0");
  double m = spec.mass_kg();
  double x = 6.0 * c.G * m * m * t_s / (5.0 * c.hbar * spec.radius_m);
  return x * x;
}

RegimeReport regime_report(double width_m, const SphereSpec& spec, const PhysicalConstants& c) {
  RegimeReport rep;
  rep.label = classify(width_m, spec);
  rep.width_m = width_m;
  rep.boundaries = regime_boundaries(spec);
  rep.mesoscopic_radius_m = mesoscopic_radius(spec.density_kg_m3, c);
  CriticalAtomNumbers nc = critical_atom_numbers(spec, c);
  rep.n_c_atomic = nc.atomic;
  rep.n_c_nuclear = nc.nuclear;
  rep.van_meter_width_m = van_meter_threshold(spec, c);
  rep.lambda_crit_per_m2_s = lambda_crit(width_m, spec, c);
  rep.dp_collapse_time_s = dp_collapse_time(spec, c);
  rep.entanglement_bound_300s = entanglement_bound(300.0, spec, c);
  rep.entanglement_bound_1200s = entanglement_bound(1200.0, spec, c);
  return rep;
}

}  // namespace gravnano
