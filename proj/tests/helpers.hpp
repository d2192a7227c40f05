#pragma once

#include <cmath>
#include <numbers>

#include "gravnano/core.hpp"

namespace testutil {

// G = hbar = 1 and a sphere with M = R = 1: every derived scale (k0, L, omega0)
// becomes 1 and closed forms can be checked against bare numbers.
inline gravnano::PhysicalConstants unit_constants() { return {1.0, 1.0}; }

inline gravnano::SphereSpec unit_sphere() {
  return {1.0, 3.0 / (4.0 * std::numbers::pi), 1e-3, 1e-5, 1e-6};
}

inline gravnano::SphereSpec silica(double radius_m) {
  return {radius_m, 2650.0, 3.3e-10, 5e-12, 9.96e-26};
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace testutil
