#include "gravnano/scenario.hpp"

#include <cstdint>
#include <cstdio>

namespace gravnano {

namespace {

using nlohmann::json;

const char* variant_name(PotentialModel::Variant v) {
  switch (v) {
    case PotentialModel::Variant::PiecewiseSpring: return "piecewise_spring";
    case PotentialModel::Variant::HyperbolicOnly: return "hyperbolic_only";
    case PotentialModel::Variant::DiosiHarmonic: return "diosi_harmonic";
  }
  throw std::invalid_argument("PotentialModel: unknown variant");
}

PotentialModel::Variant variant_from_name(const std::string& s) {
  if (s == "piecewise_spring") return PotentialModel::Variant::PiecewiseSpring;
  if (s == "hyperbolic_only") return PotentialModel::Variant::HyperbolicOnly;
  if (s == "diosi_harmonic") return PotentialModel::Variant::DiosiHarmonic;
  throw std::invalid_argument("PotentialModel: unknown variant \"" + s + "\"");
}

double get_number(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number()) throw std::invalid_argument(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

}  // namespace

json to_json(const PhysicalConstants& c) {
  return json{{"G", c.G}, {"hbar", c.hbar}};
}

json to_json(const SphereSpec& s) {
  return json{{"radius_m", s.radius_m},
              {"density_kg_m3", s.density_kg_m3},
              {"lattice_constant_m", s.lattice_constant_m},
              {"nucleus_radius_m", s.nucleus_radius_m},
              {"atom_mass_kg", s.atom_mass_kg}};
}

json to_json(const PotentialModel& m) {
  return json{{"variant", variant_name(m.variant)}, {"alpha", m.alpha}};
}

json to_json(const Scenario& s) {
  return json{{"sphere", to_json(s.sphere)},
              {"constants", to_json(s.constants)},
              {"model", to_json(s.model)},
              {"initial_spread_m", s.initial_spread_m},
              {"t_end_s", s.t_end_s},
              {"rel_tol", s.rel_tol},
              {"samples", s.samples},
              {"output", json{{"path", s.output.path}, {"format", s.output.format}}}};
}

PhysicalConstants constants_from_json(const json& j) {
  PhysicalConstants c;
  c.G = get_number(j, "G");
  c.hbar = get_number(j, "hbar");
  c.validate();
  return c;
}

SphereSpec sphere_from_json(const json& j) {
  SphereSpec s;
  s.radius_m = get_number(j, "radius_m");
  s.density_kg_m3 = get_number(j, "density_kg_m3");
  s.lattice_constant_m = get_number(j, "lattice_constant_m");
  s.nucleus_radius_m = get_number(j, "nucleus_radius_m");
  s.atom_mass_kg = get_number(j, "atom_mass_kg");
  s.validate();
  return s;
}

PotentialModel model_from_json(const json& j) {
  PotentialModel m;
  if (!j.contains("variant") || !j.at("variant").is_string())
    throw std::invalid_argument("model: missing or non-string \"variant\"");
  m.variant = variant_from_name(j.at("variant").get<std::string>());
  if (j.contains("alpha")) m.alpha = j.at("alpha").get<double>();
  m.validate();
  return m;
}

Scenario scenario_from_json(const json& j) {
  Scenario s;
  if (!j.is_object()) throw std::invalid_argument("scenario: top level must be an object");
  s.sphere = sphere_from_json(j.at("sphere"));
  if (j.contains("constants")) s.constants = constants_from_json(j.at("constants"));
  if (j.contains("model")) s.model = model_from_json(j.at("model"));
  s.initial_spread_m = get_number(j, "initial_spread_m");
  s.t_end_s = get_number(j, "t_end_s");
  if (j.contains("rel_tol")) s.rel_tol = get_number(j, "rel_tol");
  if (j.contains("samples")) {
    if (!j.at("samples").is_number_integer())
      throw std::invalid_argument("scenario: \"samples\" must be an integer");
    s.samples = j.at("samples").get<int>();
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    if (o.contains("path")) s.output.path = o.at("path").get<std::string>();
    if (o.contains("format")) s.output.format = o.at("format").get<std::string>();
    if (s.output.format != "csv" && s.output.format != "json")
      throw std::invalid_argument("scenario: output.format must be \"csv\" or \"json\"");
  }
  if (!(s.initial_spread_m > 0.0))
    throw std::invalid_argument("scenario: initial_spread_m must be > 0");
  if (!(s.t_end_s >= 0.0)) throw std::invalid_argument("scenario: t_end_s must be >= 0");
  if (s.samples < 2) throw std::invalid_argument("scenario: samples must be >= 2");
  return s;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string scenario_hash(const Scenario& s) {
  // nlohmann::json objects keep keys sorted, so dump() is already canonical.
  return fnv1a_hex(to_json(s).dump());
}

}  // namespace gravnano
