#pragma once

#include <json.hpp>
#include <string>

#include "gravnano/core.hpp"
#include "gravnano/potentials.hpp"

namespace gravnano {

struct OutputSpec {
  std::string path = "-";     // "-" = stdout
  std::string format = "csv"; // "csv" | "json"
  bool operator==(const OutputSpec&) const = default;
};

// A complete, serializable description of one dynamics run. Round-trips through
// JSON losslessly (doubles via shortest round-trip representation).
struct Scenario {
  SphereSpec sphere;
  PhysicalConstants constants;
  PotentialModel model;
  double initial_spread_m = 0.0;
  double t_end_s = 0.0;
  double rel_tol = 1e-10;
  int samples = 512;
  OutputSpec output;

  bool operator==(const Scenario&) const = default;
};

nlohmann::json to_json(const PhysicalConstants& c);
nlohmann::json to_json(const SphereSpec& s);
nlohmann::json to_json(const PotentialModel& m);
nlohmann::json to_json(const Scenario& s);

PhysicalConstants constants_from_json(const nlohmann::json& j);
SphereSpec sphere_from_json(const nlohmann::json& j);
PotentialModel model_from_json(const nlohmann::json& j);
Scenario scenario_from_json(const nlohmann::json& j);

// FNV-1a 64-bit over the canonical (sorted-key, compact) JSON serialization.
std::string scenario_hash(const Scenario& s);
std::string fnv1a_hex(const std::string& bytes);

}  // namespace gravnano
