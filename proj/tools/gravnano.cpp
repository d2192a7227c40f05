#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gravnano/choquard.hpp"
#include "gravnano/dynamics.hpp"
#include "gravnano/lattice.hpp"
#include "gravnano/potentials.hpp"
#include "gravnano/regimes.hpp"
#include "gravnano/scenario.hpp"

namespace {

using nlohmann::json;
namespace gn = gravnano;

// Scientific notation, 13 significant digits, '.' decimal, locale-free.
std::string num(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 12);
  return std::string(buf, res.ptr);
}

struct CsvWriter {
  std::ostringstream body;

  void meta(const json& j) { body << "# " << j.dump() << "\n"; }
  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) body << (i ? "," : "") << cols[i];
    body << "\n";
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) body << (i ? "," : "") << cells[i];
    body << "\n";
  }
};

// All output is accumulated first and written in one shot, so failed runs leave
// no partial files behind.
void emit(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file \"" + path + "\"");
  f << payload;
  if (!f.flush()) throw std::runtime_error("failed writing output file \"" + path + "\"");
}

json base_meta(const std::string& command, const std::string& figure = "") {
  json m{{"version", gn::version_string}, {"command", command}};
  if (!figure.empty()) m["figure"] = figure;
  return m;
}

struct SphereFlags {
  double radius_m = 1e-7;
  double density = 2650.0;
  double delta_m = 3.3e-10;
  double nucleus_m = 5e-12;
  double atom_mass_kg = 9.96e-26;

  void attach(CLI::App* cmd) {
    cmd->add_option("--radius-m", radius_m, "sphere radius [m]");
    cmd->add_option("--density", density, "mass density [kg/m^3]");
    cmd->add_option("--delta-m", delta_m, "lattice constant [m]");
    cmd->add_option("--nucleus-m", nucleus_m, "nucleus localization radius [m]");
    cmd->add_option("--atom-mass-kg", atom_mass_kg, "atom mass [kg]");
  }
  gn::SphereSpec spec() const {
    return {radius_m, density, delta_m, nucleus_m, atom_mass_kg};
  }
};

gn::PotentialModel parse_model(const std::string& name, double alpha) {
  gn::PotentialModel m;
  m.alpha = alpha;
  if (name == "piecewise_spring")
    m.variant = gn::PotentialModel::Variant::PiecewiseSpring;
  else if (name == "hyperbolic_only")
    m.variant = gn::PotentialModel::Variant::HyperbolicOnly;
  else if (name == "diosi_harmonic")
    m.variant = gn::PotentialModel::Variant::DiosiHarmonic;
  else
    throw CLI::ValidationError("--model", "unknown model \"" + name + "\"");
  m.validate();
  return m;
}

std::vector<double> log_samples(double lo, double hi, int n) {
  std::vector<double> xs(n);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) xs[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return xs;
}

std::vector<double> lin_samples(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  return xs;
}

// ---- potential ----

std::string run_potential(const gn::SphereSpec& spec, const gn::PhysicalConstants& c, double d_min,
                          double d_max, int samples, bool log_scale, bool with_structure,
                          const std::string& figure) {
  std::vector<double> ds =
      log_scale ? log_samples(d_min, d_max, samples) : lin_samples(d_min, d_max, samples);
  CsvWriter w;
  json meta = base_meta("potential", figure);
  meta["sphere"] = gn::to_json(spec);
  meta["constants"] = gn::to_json(c);
  w.meta(meta);
  if (with_structure) {
    w.header({"d_m", "v_hom_J", "v_nucleic_J", "v_schmidt_J", "v_total_J", "branch"});
    for (double d : ds) {
      double hom = gn::v_eff_sphere(d, spec, c);
      double nuc = gn::nuclear_kernel(d, spec, c);
      double sch = d > 0.0 ? gn::schmidt_kernel(d, spec, c) : 0.0;
      w.row({num(d), num(hom), num(nuc), num(sch), num(hom + nuc),
             gn::to_string(gn::v_eff_branch(d, spec))});
    }
  } else {
    w.header({"d_m", "v_eff_J", "branch"});
    for (double d : ds)
      w.row({num(d), num(gn::v_eff_sphere(d, spec, c)),
             gn::to_string(gn::v_eff_branch(d, spec))});
  }
  return w.body.str();
}

// ---- lattice ----

std::string run_lattice(double radius_in_delta, double delta_m, double atom_mass_kg,
                        int axis_samples, const gn::PhysicalConstants& c, int jobs,
                        const std::string& figure, bool with_diosi_column) {
  gn::LatticeSphere lat = gn::generate_lattice_sphere(radius_in_delta * delta_m, delta_m);
  std::vector<double> xs(axis_samples);
  for (int i = 0; i < axis_samples; ++i) xs[i] = (i + 1.0) / (axis_samples + 1.0);
  std::vector<gn::LatticeProfilePoint> prof =
      gn::normalized_profile(lat, xs, atom_mass_kg, c, jobs);

  CsvWriter w;
  json meta = base_meta("lattice", figure);
  meta["radius_in_delta"] = radius_in_delta;
  meta["delta_m"] = delta_m;
  meta["atom_mass_kg"] = atom_mass_kg;
  meta["atom_count"] = lat.atom_count();
  w.meta(meta);
  if (with_diosi_column)
    w.header({"x", "V_over_VD", "V_schmidt_over_VD", "V_diosi_over_VD", "N"});
  else
    w.header({"x", "V_over_VD", "V_schmidt_over_VD", "N"});
  for (const auto& p : prof) {
    std::vector<std::string> cells{num(p.x), num(p.v_over_vd), num(p.schmidt_over_vd)};
    if (with_diosi_column) cells.push_back(num(1.0));
    cells.push_back(std::to_string(lat.atom_count()));
    w.row(cells);
  }
  return w.body.str();
}

// ---- evolve ----

std::string run_evolve(const gn::Scenario& sc, const std::string& figure) {
  gn::Trajectory traj = gn::evolve(sc.sphere, sc.constants, sc.model, sc.initial_spread_m,
                                   sc.t_end_s, sc.rel_tol, sc.samples);
  double mass = sc.sphere.mass_kg();

  if (sc.output.format == "json") {
    json meta = base_meta("evolve", figure);
    meta["scenario"] = gn::to_json(sc);
    meta["scenario_hash"] = gn::scenario_hash(sc);
    json rows = json::array();
    for (const auto& s : traj.samples) {
      double wf = std::sqrt(1.5) * gn::free_spread(sc.initial_spread_m, mass, s.t_s, sc.constants);
      rows.push_back({{"t_s", s.t_s},
                      {"width_m", s.width_m},
                      {"width_free_m", wf},
                      {"E_eff_J", s.e_eff_J}});
    }
    return json{{"meta", meta}, {"samples", rows}}.dump(2) + "\n";
  }

  CsvWriter w;
  json meta = base_meta("evolve", figure);
  meta["scenario"] = gn::to_json(sc);
  meta["scenario_hash"] = gn::scenario_hash(sc);
  w.meta(meta);
  w.header({"t_s", "width_m", "width_free_m", "E_eff_J"});
  for (const auto& s : traj.samples) {
    double wf = std::sqrt(1.5) * gn::free_spread(sc.initial_spread_m, mass, s.t_s, sc.constants);
    w.row({num(s.t_s), num(s.width_m), num(wf), num(s.e_eff_J)});
  }
  return w.body.str();
}

// ---- boundstate ----

std::string run_boundstate(double r_min, double r_max, int samples, double density,
                           const gn::PotentialModel& model, const gn::PhysicalConstants& c,
                           const std::string& figure) {
  CsvWriter w;
  json meta = base_meta("boundstate", figure);
  meta["density_kg_m3"] = density;
  meta["model"] = gn::to_json(model);
  w.meta(meta);
  w.header({"R_m", "width_m", "width_hyp_m"});
  gn::PotentialModel hyp = model;
  hyp.variant = gn::PotentialModel::Variant::HyperbolicOnly;
  for (double r : log_samples(r_min, r_max, samples)) {
    gn::SphereSpec spec;
    spec.radius_m = r;
    spec.density_kg_m3 = density;
    // Structural scales are irrelevant here; shrink them for tiny spheres.
    spec.lattice_constant_m = std::min(3.3e-10, r / 4.0);
    spec.nucleus_radius_m = spec.lattice_constant_m / 100.0;
    w.row({num(r), num(gn::bound_state_width(spec, c, model)),
           num(gn::bound_state_width(spec, c, hyp))});
  }
  return w.body.str();
}

// ---- choquard ----

std::string run_choquard(int nodes, double rmax, int steps, const std::string& profile_path,
                         const std::string& figure) {
  gn::RadialGrid grid;
  grid.r_max = rmax;
  grid.steps = steps;
  gn::ChoquardState st = gn::shoot_state(nodes, grid);
  gn::VirialReport vr = gn::virial_check(st);

  if (!profile_path.empty()) {
    CsvWriter w;
    json meta = base_meta("choquard", figure);
    meta["n"] = st.n;
    w.meta(meta);
    w.header({"r", "phi", "u"});
    for (Eigen::Index i = 0; i < st.r.size(); ++i)
      w.row({num(st.r[i]), num(st.phi[i]), num(st.u[i])});
    emit(profile_path, w.body.str());
  }

  json out{{"meta", base_meta("choquard", figure)},
           {"n", st.n},
           {"e_n", st.e_n},
           {"E_K", st.e_kinetic},
           {"E_P", st.e_potential},
           {"E_total", st.e_total},
           {"r_cut", st.r_cut},
           {"virial_residuals", {{"r1", vr.r1}, {"r2", vr.r2}, {"r3", vr.r3}}}};
  return out.dump(2) + "\n";
}

// ---- regime ----

std::string run_regime(double width_m, const gn::SphereSpec& spec, const gn::PhysicalConstants& c) {
  gn::RegimeReport rep = gn::regime_report(width_m, spec, c);
  json out{{"meta", base_meta("regime")},
           {"label", gn::to_string(rep.label)},
           {"width_m", rep.width_m},
           {"boundaries",
            {{"nuclear_atomic_m", rep.boundaries.nuclear_atomic_m},
             {"atomic_mesoscopic_m", rep.boundaries.atomic_mesoscopic_m},
             {"mesoscopic_quantum_m", rep.boundaries.mesoscopic_quantum_m}}},
           {"mesoscopic_radius_m", rep.mesoscopic_radius_m},
           {"n_c_atomic", rep.n_c_atomic},
           {"n_c_nuclear", rep.n_c_nuclear},
           {"van_meter_width_m", rep.van_meter_width_m},
           {"lambda_crit_per_m2_s", rep.lambda_crit_per_m2_s},
           {"dp_collapse_time_s", rep.dp_collapse_time_s},
           {"entanglement_bound_300s", rep.entanglement_bound_300s},
           {"entanglement_bound_1200s", rep.entanglement_bound_1200s},
           {"sphere", gn::to_json(spec)}};
  return out.dump(2) + "\n";
}

// ---- figure presets ----

gn::Scenario spread_scenario(double radius_m, double density, double spread_m, double t_end_s) {
  gn::Scenario sc;
  sc.sphere.radius_m = radius_m;
  sc.sphere.density_kg_m3 = density;
  sc.initial_spread_m = spread_m;
  sc.t_end_s = t_end_s;
  return sc;
}

std::string run_figure(const std::string& name, const gn::PhysicalConstants& c, int jobs) {
  if (name == "fig1" || name == "fig10") {
    gn::SphereSpec spec(1e-8, 2650.0, 3.3e-10, name == "fig1" ? 1e-15 : 5e-12, 9.96e-26);
    return run_potential(spec, c, 1e-13, 1e-6, 241, true, true, name);
  }
  if (name == "fig2") {
    gn::SphereSpec spec;
    double unit = c.G * spec.mass_kg() * spec.mass_kg() / spec.radius_m;
    gn::PotentialModel pw, hyp, dio;
    pw.variant = gn::PotentialModel::Variant::PiecewiseSpring;
    hyp.variant = gn::PotentialModel::Variant::HyperbolicOnly;
    dio.variant = gn::PotentialModel::Variant::DiosiHarmonic;
    CsvWriter w;
    w.meta(base_meta("figure", "fig2"));
    w.header({"x", "v_quintic", "v_parabola", "v_hyperbola"});
    for (double x : lin_samples(0.02, 4.0, 200)) {
      double d = x * spec.radius_m;
      w.row({num(x), num(gn::v_eff_antiderivative(d, spec, c, pw) / unit),
             num(gn::v_eff_antiderivative(d, spec, c, dio) / unit),
             num(gn::v_eff_antiderivative(d, spec, c, hyp) / unit)});
    }
    return w.body.str();
  }
  if (name == "fig3") {
    std::string a = run_lattice(5.0, 3.3e-10, 9.96e-26, 24, c, jobs, name, false);
    std::string b = run_lattice(10.0, 3.3e-10, 9.96e-26, 24, c, jobs, name, false);
    // Drop the second header block so the result is a single CSV stream.
    std::size_t pos = b.find('\n');
    pos = b.find('\n', pos + 1);
    return a + b.substr(pos + 1);
  }
  if (name == "fig4") return run_lattice(5.0, 3.3e-10, 9.96e-26, 24, c, jobs, name, true);
  if (name == "fig5") {
    gn::Scenario sc = spread_scenario(1e-7, 2650.0, 1e-7, 1e4);
    return run_evolve(sc, name);
  }
  if (name == "fig6") {
    gn::Scenario sc = spread_scenario(1e-6, 2650.0, 1e-11, 3000.0);
    return run_evolve(sc, name);
  }
  if (name == "fig9") {
    gn::PotentialModel model;
    return run_boundstate(1e-9, 1e-5, 61, 2650.0, model, c, name);
  }
  throw CLI::ValidationError("figure", "unknown preset \"" + name + "\" (fig1 fig2 fig3 fig4 fig5 fig6 fig9 fig10)");
}

json error_object(const std::string& type, const std::string& message) {
  return json{{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-gravity of crystalline nanospheres: potentials, lattices, Gaussian dynamics"};
  app.require_subcommand(1);

  std::string out_path = "-";
  bool deterministic = false;
  int jobs = 0;
  gn::PhysicalConstants constants;
  app.add_option("-o,--output", out_path, "output path ('-' = stdout)");
  app.add_flag("--deterministic", deterministic, "pin a fixed worker layout for byte-stable output");
  app.add_option("--jobs", jobs, "worker threads for pair sums (0 = GRAVNANO_JOBS or hardware)");
  app.add_option("--G", constants.G, "gravitational constant override");
  app.add_option("--hbar", constants.hbar, "reduced Planck constant override");

  // potential
  auto* cmd_pot = app.add_subcommand("potential", "two-sphere effective potential curve")->fallthrough();
  SphereFlags pot_sphere;
  pot_sphere.attach(cmd_pot);
  double pot_dmin = 0.0, pot_dmax = 0.0;
  int pot_samples = 201;
  bool pot_log = false, pot_structure = false;
  cmd_pot->add_option("--d-min-m", pot_dmin, "smallest center distance [m]");
  cmd_pot->add_option("--d-max-m", pot_dmax, "largest center distance [m] (default 4R)");
  cmd_pot->add_option("--samples", pot_samples, "number of distances");
  cmd_pot->add_flag("--log", pot_log, "log-spaced distances (requires --d-min-m > 0)");
  cmd_pot->add_flag("--structure", pot_structure,
                    "emit homogeneous + nucleic + point-pair decomposition");

  // lattice
  auto* cmd_lat = app.add_subcommand("lattice", "normalized lattice pair-sum profile")->fallthrough();
  double lat_r_in_delta = 5.0, lat_delta = 3.3e-10, lat_mass = 9.96e-26;
  int lat_axis_samples = 24;
  cmd_lat->add_option("--radius-in-delta", lat_r_in_delta, "sphere radius in lattice steps");
  cmd_lat->add_option("--delta-m", lat_delta, "lattice constant [m]");
  cmd_lat->add_option("--atom-mass-kg", lat_mass, "atom mass [kg]");
  cmd_lat->add_option("--axis-samples", lat_axis_samples, "profile samples on x in (0,1)");

  // evolve
  auto* cmd_evo = app.add_subcommand("evolve", "Gaussian width dynamics")->fallthrough();
  SphereFlags evo_sphere;
  evo_sphere.attach(cmd_evo);
  std::string evo_scenario_path, evo_model = "piecewise_spring", evo_format = "csv";
  double evo_alpha = 1.0, evo_spread = 0.0, evo_tend = 0.0, evo_reltol = 1e-10;
  int evo_samples = 512;
  cmd_evo->add_option("--scenario", evo_scenario_path, "JSON scenario file (overrides flags)");
  cmd_evo->add_option("--model", evo_model,
                      "piecewise_spring | hyperbolic_only | diosi_harmonic");
  cmd_evo->add_option("--alpha", evo_alpha, "width rescaling of the model");
  cmd_evo->add_option("--initial-spread-m", evo_spread, "initial per-axis width parameter [m]");
  cmd_evo->add_option("--t-end-s", evo_tend, "simulated time [s]");
  cmd_evo->add_option("--rel-tol", evo_reltol, "integrator relative tolerance");
  cmd_evo->add_option("--samples", evo_samples, "output samples");
  cmd_evo->add_option("--format", evo_format, "csv | json");

  // boundstate
  auto* cmd_bs = app.add_subcommand("boundstate", "stationary width vs sphere radius")->fallthrough();
  double bs_rmin = 1e-9, bs_rmax = 1e-5, bs_density = 2650.0, bs_alpha = 1.0;
  int bs_samples = 61;
  std::string bs_model = "piecewise_spring";
  cmd_bs->add_option("--r-min-m", bs_rmin, "smallest radius [m]");
  cmd_bs->add_option("--r-max-m", bs_rmax, "largest radius [m]");
  cmd_bs->add_option("--samples", bs_samples, "number of radii (log-spaced)");
  cmd_bs->add_option("--density", bs_density, "mass density [kg/m^3]");
  cmd_bs->add_option("--model", bs_model, "piecewise_spring | hyperbolic_only | diosi_harmonic");
  cmd_bs->add_option("--alpha", bs_alpha, "width rescaling of the model");

  // choquard
  auto* cmd_ch = app.add_subcommand("choquard", "stationary self-gravitating bound state")->fallthrough();
  int ch_nodes = 0, ch_steps = 0;
  double ch_rmax = 0.0;
  std::string ch_profile;
  cmd_ch->add_option("--nodes", ch_nodes, "radial node count n");
  cmd_ch->add_option("--rmax", ch_rmax, "shooting domain limit (0 = auto)");
  cmd_ch->add_option("--steps", ch_steps, "shooting grid steps (0 = auto)");
  cmd_ch->add_option("--profile", ch_profile, "also write the radial profile CSV here");

  // regime
  auto* cmd_reg = app.add_subcommand("regime", "regime classification report")->fallthrough();
  SphereFlags reg_sphere;
  reg_sphere.attach(cmd_reg);
  double reg_width = 1e-9;
  cmd_reg->add_option("--width-m", reg_width, "wave packet width sqrt(<r^2>) [m]");

  // figure
  auto* cmd_fig = app.add_subcommand("figure", "named figure-reproduction presets")->fallthrough();
  std::string fig_name;
  cmd_fig->add_option("name", fig_name, "fig1 fig2 fig3 fig4 fig5 fig6 fig9 fig10")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (deterministic && jobs == 0) jobs = 1;
    std::string payload;

    if (cmd_pot->parsed()) {
      gn::SphereSpec spec = pot_sphere.spec();
      double dmax = pot_dmax > 0.0 ? pot_dmax : 4.0 * spec.radius_m;
      double dmin = pot_dmin;
      if (pot_log && !(dmin > 0.0))
        throw CLI::ValidationError("--log", "requires --d-min-m > 0");
      payload = run_potential(spec, constants, dmin, dmax, pot_samples, pot_log, pot_structure, "");
    } else if (cmd_lat->parsed()) {
      payload = run_lattice(lat_r_in_delta, lat_delta, lat_mass, lat_axis_samples, constants, jobs,
                            "", false);
    } else if (cmd_evo->parsed()) {
      gn::Scenario sc;
      if (!evo_scenario_path.empty()) {
        std::ifstream f(evo_scenario_path);
        if (!f) throw CLI::FileError::Missing(evo_scenario_path);
        json j;
        try {
          j = json::parse(f);
          sc = gn::scenario_from_json(j);
        } catch (const json::exception& e) {
          std::cerr << error_object("config_parse", e.what()).dump() << "\n";
          return 2;
        } catch (const std::invalid_argument& e) {
          std::cerr << error_object("config_parse", e.what()).dump() << "\n";
          return 2;
        }
      } else {
        sc.sphere = evo_sphere.spec();
        sc.constants = constants;
        sc.model = parse_model(evo_model, evo_alpha);
        sc.initial_spread_m = evo_spread;
        sc.t_end_s = evo_tend;
        sc.rel_tol = evo_reltol;
        sc.samples = evo_samples;
        sc.output.format = evo_format;
        if (!(sc.initial_spread_m > 0.0))
          throw CLI::ValidationError("--initial-spread-m", "must be > 0");
      }
      if (out_path != "-") sc.output.path = out_path;
      payload = run_evolve(sc, "");
      emit(sc.output.path, payload);
      return 0;
    } else if (cmd_bs->parsed()) {
      gn::PotentialModel model = parse_model(bs_model, bs_alpha);
      payload = run_boundstate(bs_rmin, bs_rmax, bs_samples, bs_density, model, constants, "");
    } else if (cmd_ch->parsed()) {
      payload = run_choquard(ch_nodes, ch_rmax, ch_steps, ch_profile, "");
    } else if (cmd_reg->parsed()) {
      payload = run_regime(reg_width, reg_sphere.spec(), constants);
    } else if (cmd_fig->parsed()) {
      payload = run_figure(fig_name, constants, jobs);
    }

    emit(out_path, payload);
    return 0;
  } catch (const CLI::Error& e) {
    std::cerr << error_object("config_parse", e.what()).dump() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << error_object("invalid_argument", e.what()).dump() << "\n";
    return 1;
  } catch (const gn::CoincidentPairError& e) {
    json err = error_object("coincident_pair", e.what());
    err["error"]["i"] = e.i;
    err["error"]["j"] = e.j;
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << error_object("module_error", e.what()).dump() << "\n";
    return 1;
  }
}
