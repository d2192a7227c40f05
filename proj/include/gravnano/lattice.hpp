#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "gravnano/core.hpp"

namespace gravnano {

struct CoincidentPairError : std::runtime_error {
  std::size_t i, j;
  CoincidentPairError(std::size_t i_, std::size_t j_, const std::string& what)
      : std::runtime_error(what), i(i_), j(j_) {}
};

// Cubic lattice sites delta*(k,l,m) with |delta*(k,l,m)| <= R, in lexicographic
// (k,l,m) order.
struct LatticeSphere {
  double radius_m = 0.0;
  double delta_m = 0.0;
  std::vector<Eigen::Vector3i> points;

  std::size_t atom_count() const { return points.size(); }
};

LatticeSphere generate_lattice_sphere(double radius_m, double delta_m);

// Resolve the worker count: explicit jobs > 0 wins, else GRAVNANO_JOBS, else
// hardware concurrency.
int effective_jobs(int jobs);

// -G m^2 sum_{i,j} 1/|x_i - (x_j + t)| over all N^2 ordered pairs between the
// lattice and its translated copy. Kahan-compensated, chunked over rows with a
// fixed chunk size and in-order reduction, so the result is identical for any
// worker count. Throws CoincidentPairError when a pair distance falls below
// 1e-15 * delta.
double lattice_pair_energy(const LatticeSphere& lattice, const Eigen::Vector3d& translation_m,
                           double atom_mass_kg, const PhysicalConstants& c, int jobs = 0);

struct LatticeProfilePoint {
  double x;               // translation in units of delta, along +x
  double v_over_vd;       // E(x*delta) / V_D
  double schmidt_over_vd; // V_S(x*delta) / V_D
};

// V_D = -6 G (N m)^2 / (5 R) with R the generating radius; the profile
// x -> E(x delta)/V_D exhibits the Diosi plateau ~1 away from the endpoints and
// the Schmidt divergence toward x = 0 and x = 1.
std::vector<LatticeProfilePoint> normalized_profile(const LatticeSphere& lattice,
                                                    const std::vector<double>& axis_fractions,
                                                    double atom_mass_kg,
                                                    const PhysicalConstants& c, int jobs = 0);

}  // namespace gravnano
