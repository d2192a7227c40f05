#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "gravnano/core.hpp"
#include "helpers.hpp"

using namespace gravnano;

TEST_CASE("physical constants defaults and validation") {
  PhysicalConstants c;
  CHECK(c.G == doctest::Approx(6.674e-11).epsilon(1e-15));
  CHECK(c.hbar == doctest::Approx(1.0546e-34).epsilon(1e-15));
  CHECK_NOTHROW(c.validate());

  PhysicalConstants bad = c;
  bad.G = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.hbar = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("sphere mass and atom count") {
  SphereSpec s = testutil::silica(1e-7);
  CHECK(s.mass_kg() == doctest::Approx(1.1100294042683933e-17).epsilon(1e-12));
  CHECK(s.atom_count() == doctest::Approx(s.mass_kg() / 9.96e-26).epsilon(1e-15));

  SphereSpec small = testutil::silica(1e-8);
  CHECK(small.atom_count() == doctest::Approx(111448.73536831258).epsilon(1e-12));

  SphereSpec u = testutil::unit_sphere();
  CHECK(u.mass_kg() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sphere validation catches broken specs") {
  CHECK_THROWS_AS(SphereSpec(-1e-7, 2650.0, 3.3e-10, 5e-12, 9.96e-26), std::invalid_argument);
  CHECK_THROWS_AS(SphereSpec(1e-7, 0.0, 3.3e-10, 5e-12, 9.96e-26), std::invalid_argument);
  CHECK_THROWS_AS(SphereSpec(1e-7, 2650.0, -3.3e-10, 5e-12, 9.96e-26), std::invalid_argument);
  CHECK_THROWS_AS(SphereSpec(1e-7, 2650.0, 3.3e-10, 0.0, 9.96e-26), std::invalid_argument);
  CHECK_THROWS_AS(SphereSpec(1e-7, 2650.0, 3.3e-10, 5e-12, -1.0), std::invalid_argument);
  // ordering constraints
  CHECK_THROWS_AS(SphereSpec(1e-7, 2650.0, 3.3e-10, 4e-10, 9.96e-26), std::invalid_argument);
  CHECK_THROWS_AS(SphereSpec(1e-10, 2650.0, 3.3e-10, 5e-12, 9.96e-26), std::invalid_argument);
  // derived atom count below 1
  CHECK_THROWS_AS(SphereSpec(1e-7, 2650.0, 3.3e-10, 5e-12, 1.0), std::invalid_argument);
}

TEST_CASE("random valid spheres pass validation") {
  std::mt19937 rng(91);
  std::uniform_real_distribution<double> logr(std::log(1e-8), std::log(1e-5));
  for (int i = 0; i < 50; ++i) {
    double r = std::exp(logr(rng));
    CHECK_NOTHROW(SphereSpec(r, 2650.0, std::min(3.3e-10, r / 8.0),
                             std::min(3.3e-10, r / 8.0) / 50.0, 9.96e-26));
  }
}

TEST_CASE("regime labels") {
  CHECK(std::string(to_string(Regime::Nuclear)) == "nuclear");
  CHECK(std::string(to_string(Regime::Atomic)) == "atomic");
  CHECK(std::string(to_string(Regime::Mesoscopic)) == "mesoscopic");
  CHECK(std::string(to_string(Regime::Quantum)) == "quantum");
  CHECK(std::string(version_string) == "0.1.0");
}
