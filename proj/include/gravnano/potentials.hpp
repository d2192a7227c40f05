#pragma once

#include "gravnano/core.hpp"

namespace gravnano {

// Which closed-form branch applies at center distance d: the overlap quintic
// (d < 2R) or the point-mass Coulomb tail (d >= 2R).
enum class PotentialBranch { Overlap, Coulomb };

inline const char* to_string(PotentialBranch b) {
  return b == PotentialBranch::Overlap ? "quintic" : "coulomb";
}

struct PotentialModel {
  enum class Variant { PiecewiseSpring, HyperbolicOnly, DiosiHarmonic };
  Variant variant = Variant::PiecewiseSpring;
  double alpha = 1.0;  // width rescaling; > 0

  void validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("PotentialModel: alpha must be positive");
  }
  bool operator==(const PotentialModel&) const = default;
};

// Self-interaction potential of a homogeneous sphere displaced against its own
// copy by d: quintic polynomial inside the overlap region, -GM^2/d outside.
// C3 at d = 2R; the 4th derivative jumps there.
double v_eff_sphere(double d_m, const SphereSpec& spec, const PhysicalConstants& c);
PotentialBranch v_eff_branch(double d_m, const SphereSpec& spec);

struct QuadratureResult {
  double value;           // J
  double error_estimate;  // absolute, from half-resolution comparison
  bool within_tolerance;  // error_estimate <= rel_tol * |value|
};

// Independent oracle for v_eff_sphere: composite-Simpson integration of the
// spherical-slice decomposition (solid-angle weighted shells against the inner
// and Coulomb potentials of the partner sphere), segments split at the
// potential's r = R boundary. d = 0 integrates a single sphere's interior.
QuadratureResult v_eff_sphere_quadrature(double d_m, const SphereSpec& spec,
                                         const PhysicalConstants& c, int subdivisions,
                                         double rel_tol = 1e-9);

// Width-dependent spring constant k(width) of the Gaussian effective dynamics.
// PiecewiseSpring: k0 (1 - 9/16 x + 1/32 x^3) with x = alpha*width/R for x < 2,
// hyperbolic GM^2/(alpha*width)^3 beyond. HyperbolicOnly: the latter everywhere.
// DiosiHarmonic: k0 = GM^2/R^3 independent of width.
double spring_constant(double width_m, const SphereSpec& spec, const PhysicalConstants& c,
                       const PotentialModel& model);

// Potential V(width) with dV/dwidth = width * k(width); the energy partner of
// spring_constant for each model variant.
double v_eff_antiderivative(double width_m, const SphereSpec& spec, const PhysicalConstants& c,
                            const PotentialModel& model);

// Point-nuclei kernel -G N m^2 / d (all mass in coincident point pairs).
double schmidt_kernel(double d_m, const SphereSpec& spec, const PhysicalConstants& c);

// Lattice-of-nuclei self term: N aligned nucleus pairs, each a homogeneous
// sphere of radius nucleus_radius_m and mass atom_mass_kg.
double nuclear_kernel(double d_m, const SphereSpec& spec, const PhysicalConstants& c);

// k_hom + k_nucleic = G M^2 / lattice_constant^3 + G M^2 / (N nucleus_radius^3).
double structure_corrected_spring(const SphereSpec& spec, const PhysicalConstants& c);

// k_nucleic / k_hom = (lattice_constant / nucleus_radius)^3 / N.
double structure_spring_ratio(const SphereSpec& spec);

}  // namespace gravnano
