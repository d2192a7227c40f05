#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gravnano {

inline constexpr const char* version_string = "0.1.0";

/// Constants used throughout, overridable for dimensionless work (set G = hbar = 1).
struct PhysicalConstants {
  double G = 6.674e-11;      // m^3 kg^-1 s^-2
  double hbar = 1.0546e-34;  // J s

  void validate() const {
    if (!(G > 0.0) || !(hbar > 0.0))
      throw std::invalid_argument("PhysicalConstants: G and hbar must be positive");
  }

  bool operator==(const PhysicalConstants&) const = default;
};

/// A crystalline nanosphere: homogeneous density at large scale, cubic lattice of
/// point nuclei at small scale. nucleus_radius_m doubles as the zero-point
/// delocalization width of a nucleus.
struct SphereSpec {
  // Defaults: a 100 nm silica sphere (SiO2 unit mass, ~3.3 A lattice step,
  // 5e-12 m zero-point nucleus delocalization).
  double radius_m = 1e-7;
  double density_kg_m3 = 2650.0;
  double lattice_constant_m = 3.3e-10;
  double nucleus_radius_m = 5e-12;
  double atom_mass_kg = 9.96e-26;

  SphereSpec() = default;

  SphereSpec(double radius_m_, double density_kg_m3_, double lattice_constant_m_,
             double nucleus_radius_m_, double atom_mass_kg_)
      : radius_m(radius_m_),
        density_kg_m3(density_kg_m3_),
        lattice_constant_m(lattice_constant_m_),
        nucleus_radius_m(nucleus_radius_m_),
        atom_mass_kg(atom_mass_kg_) {
    validate();
  }

  double mass_kg() const {
    return density_kg_m3 * (4.0 / 3.0) * std::numbers::pi * radius_m * radius_m * radius_m;
  }

  // Number of atoms (equivalently nuclei); real-valued, >= 1 by construction.
  double atom_count() const { return mass_kg() / atom_mass_kg; }

  void validate() const {
    if (!(radius_m > 0.0) || !(density_kg_m3 > 0.0) || !(lattice_constant_m > 0.0) ||
        !(nucleus_radius_m > 0.0) || !(atom_mass_kg > 0.0))
      throw std::invalid_argument("SphereSpec: all fields must be strictly positive");
    if (!(nucleus_radius_m < lattice_constant_m))
      throw std::invalid_argument("SphereSpec: nucleus_radius_m must be < lattice_constant_m");
    if (!(lattice_constant_m < radius_m))
      throw std::invalid_argument("SphereSpec: lattice_constant_m must be < radius_m");
    if (!(atom_count() >= 1.0))
      throw std::invalid_argument("SphereSpec: derived atom count is below 1");
  }

  bool operator==(const SphereSpec&) const = default;
};

enum class Regime { Nuclear, Atomic, Mesoscopic, Quantum };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Nuclear: return "nuclear";
    case Regime::Atomic: return "atomic";
    case Regime::Mesoscopic: return "mesoscopic";
    case Regime::Quantum: return "quantum";
  }
  return "unknown";
}

}  // namespace gravnano
