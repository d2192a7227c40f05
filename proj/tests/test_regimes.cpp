#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gravnano/regimes.hpp"
#include "helpers.hpp"

using namespace gravnano;
using testutil::rel_diff;

TEST_CASE("regime boundaries of a 10 nm silica sphere") {
  SphereSpec spec(1e-8, 2650.0, 3.3e-10, 1e-15, 9.96e-26);
  RegimeBoundaries b = regime_boundaries(spec);
  CHECK(rel_diff(b.nuclear_atomic_m, 2e-15) < 1e-14);
  CHECK(rel_diff(b.atomic_mesoscopic_m, 1.2 * spec.radius_m / spec.atom_count()) < 1e-14);
  CHECK(rel_diff(b.atomic_mesoscopic_m, 1.0767282338684907e-13) < 1e-6);
  CHECK(rel_diff(b.mesoscopic_quantum_m, 2e-8) < 1e-14);

  CHECK(classify(1e-15, spec) == Regime::Nuclear);
  CHECK(classify(b.nuclear_atomic_m, spec) == Regime::Nuclear);  // boundary goes down
  CHECK(classify(1e-14, spec) == Regime::Atomic);
  CHECK(classify(b.atomic_mesoscopic_m, spec) == Regime::Atomic);
  CHECK(classify(1e-10, spec) == Regime::Mesoscopic);
  CHECK(classify(b.mesoscopic_quantum_m, spec) == Regime::Mesoscopic);
  CHECK(classify(1e-7, spec) == Regime::Quantum);
  CHECK_THROWS_AS(classify(0.0, spec), std::invalid_argument);
}

TEST_CASE("atomic band collapses for macroscopic spheres") {
  SphereSpec spec = testutil::silica(1e-5);
  RegimeBoundaries b = regime_boundaries(spec);
  CHECK(1.2 * spec.radius_m / spec.atom_count() < b.nuclear_atomic_m);
  CHECK(b.atomic_mesoscopic_m == b.nuclear_atomic_m);
  CHECK(rel_diff(b.nuclear_atomic_m, 1e-11) < 1e-14);
  CHECK(classify(1.0000001e-11, spec) == Regime::Mesoscopic);
  CHECK(classify(1e-11, spec) == Regime::Nuclear);
}

TEST_CASE("mesoscopic radius: pin and density scaling") {
  PhysicalConstants c;
  double m2650 = mesoscopic_radius(2650.0, c);
  CHECK(rel_diff(m2650, 1.0199493093012274e-7) < 1e-9);
  double m1000 = mesoscopic_radius(1000.0, c);
  CHECK(rel_diff(m1000 / m2650, std::pow(1000.0 / 2650.0, -0.3)) < 1e-12);
  CHECK_THROWS_AS(mesoscopic_radius(0.0, c), std::invalid_argument);
}

TEST_CASE("critical atom numbers for a water-like lattice") {
  PhysicalConstants c;
  SphereSpec water(1e-7, 1000.0, 1e-10, 5e-12, 3e-26);
  CriticalAtomNumbers nc = critical_atom_numbers(water, c);
  CHECK(rel_diff(nc.atomic, 248435002117088.2) < 1e-6);
  CHECK(rel_diff(nc.nuclear / nc.atomic,
                 std::sqrt(water.lattice_constant_m / water.nucleus_radius_m)) < 1e-12);
}

TEST_CASE("van Meter localization width, unit sphere") {
  CHECK(rel_diff(van_meter_threshold(testutil::unit_sphere(), testutil::unit_constants()),
                 1.4815439999999995) < 1e-12);
}

TEST_CASE("critical decoherence rate density: branches and pins") {
  PhysicalConstants c;
  SphereSpec spec = testutil::silica(1e-7);
  double meso = lambda_crit(1e-7, spec, c);
  double quantum = lambda_crit(3e-7, spec, c);
  CHECK(rel_diff(meso, 77977157857.4258) < 1e-9);
  CHECK(rel_diff(quantum, 43113150082.07737) < 1e-9);
  CHECK(lambda_crit(2e-7, spec, c) == meso);            // boundary stays on the trapped side
  CHECK(lambda_crit(2.001e-7, spec, c) == quantum);
  CHECK_THROWS_AS(lambda_crit(-1.0, spec, c), std::invalid_argument);

  CHECK(lambda_deco(2.0, 3.0) == 6.0);
  CHECK_THROWS_AS(lambda_deco(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("gravitational collapse time") {
  CHECK(rel_diff(dp_collapse_time(testutil::unit_sphere(), testutil::unit_constants()),
                 6.134969325153374) < 1e-12);
  PhysicalConstants c;
  SphereSpec meso(mesoscopic_radius(2000.0, c), 2000.0, 3.3e-10, 5e-12, 9.96e-26);
  CHECK(rel_diff(dp_collapse_time(meso, c), 8204.648727118985) < 1e-9);
}

TEST_CASE("entanglement bound: pins and exact time scaling") {
  PhysicalConstants c;
  SphereSpec spec(1e-7, 2000.0, 3.3e-10, 5e-12, 9.96e-26);
  CHECK(rel_diff(entanglement_bound(300.0, spec, c), 0.02556679516820619) < 1e-9);
  CHECK(rel_diff(entanglement_bound(1200.0, spec, c), 0.409068722691299) < 1e-9);
  CHECK(entanglement_bound(600.0, spec, c) == 4.0 * entanglement_bound(300.0, spec, c));
  CHECK_THROWS_AS(entanglement_bound(-1.0, spec, c), std::invalid_argument);
}

TEST_CASE("regime report aggregates the individual diagnostics") {
  PhysicalConstants c;
  SphereSpec spec = testutil::silica(1e-7);
  RegimeReport rep = regime_report(5e-9, spec, c);
  CHECK(rep.width_m == 5e-9);
  CHECK(rep.label == classify(5e-9, spec));
  CHECK(rep.boundaries.mesoscopic_quantum_m == regime_boundaries(spec).mesoscopic_quantum_m);
  CHECK(rep.mesoscopic_radius_m == mesoscopic_radius(spec.density_kg_m3, c));
  CHECK(rep.n_c_atomic == critical_atom_numbers(spec, c).atomic);
  CHECK(rep.n_c_nuclear == critical_atom_numbers(spec, c).nuclear);
  CHECK(rep.van_meter_width_m == van_meter_threshold(spec, c));
  CHECK(rep.lambda_crit_per_m2_s == lambda_crit(5e-9, spec, c));
  CHECK(rep.dp_collapse_time_s == dp_collapse_time(spec, c));
  CHECK(rep.entanglement_bound_300s == entanglement_bound(300.0, spec, c));
  CHECK(rep.entanglement_bound_1200s == entanglement_bound(1200.0, spec, c));
}
