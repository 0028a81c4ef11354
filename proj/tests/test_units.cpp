#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "pair_radiance/errors.hpp"
#include "pair_radiance/units.hpp"

using namespace pair_radiance;
using C = PhysicalConstants;

TEST_SUITE("units") {
  TEST_CASE("two solar masses on a one hour orbit move at v_R = 0.0026") {
    const auto orbit = derive_orbit(OrbitInput::from_period(2.0 * C::M_sun, 0.5, 3600.0));
    CHECK(std::round(orbit.v_R * 1e4) / 1e4 == doctest::Approx(0.0026).epsilon(1e-12));
    CHECK(orbit.omega * orbit.T == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(orbit.r1 + orbit.r2 == doctest::Approx(2.0 * C::G * orbit.total_mass / (C::c * C::c)).epsilon(1e-15));
    CHECK(orbit.r1 == doctest::Approx(orbit.r2).epsilon(1e-15));
    CHECK_FALSE(orbit.relativistic_warning);
  }

  TEST_CASE("raising the frequency eightfold quarters R and doubles v_R") {
    const auto a = derive_orbit(OrbitInput::from_omega(3.0e30, 0.3, 1e-3));
    const auto b = derive_orbit(OrbitInput::from_omega(3.0e30, 0.3, 8e-3));
    CHECK(oracle::rel(b.R, a.R / 4.0) < 1e-14);
    CHECK(oracle::rel(b.v_R, 2.0 * a.v_R) < 1e-14);
  }

  TEST_CASE("one solar mass with a one year period matches Earth's orbital speed") {
    const auto orbit = derive_orbit(OrbitInput::from_period(C::M_sun, 0.5, C::seconds_per_year));
    // Earth mean orbital speed 29.78 km/s.
    CHECK(oracle::rel(orbit.v_R, 29.78e3 / C::c) < 0.01);
    CHECK(orbit.v_R == doctest::Approx(9.9e-5).epsilon(0.01));
  }

  TEST_CASE("Kepler identity residual") {
    auto orbit = derive_orbit(OrbitInput::from_period(2.0 * C::M_sun, 0.5, 3600.0));
    CHECK(check_kepler_identity(orbit) < 1e-12);
    for (double mass : {1e25, 1e30, 4e31}) {
      for (double period : {1e2, 3600.0, 1e8}) {
        CHECK(check_kepler_identity(derive_orbit(OrbitInput::from_period(mass, 0.2, period))) < 1e-12);
      }
    }
    orbit.R *= 1.01;
    CHECK(check_kepler_identity(orbit) == doctest::Approx(0.01).epsilon(1e-6));
  }

  TEST_CASE("mass scaling at fixed frequency is linear in the cube root") {
    const double lambda = 1.7;
    const auto a = derive_orbit(OrbitInput::from_omega(1e30, 0.4, 2e-4));
    const auto b = derive_orbit(OrbitInput::from_omega(1e30 * lambda * lambda * lambda, 0.4, 2e-4));
    CHECK(oracle::rel(b.R, lambda * a.R) < 1e-15);
    CHECK(oracle::rel(b.v_R, lambda * a.v_R) < 1e-15);
  }

  TEST_CASE("period and frequency inputs round trip") {
    const auto a = derive_orbit(OrbitInput::from_period(5e30, 0.25, 7200.0));
    const auto b = derive_orbit(OrbitInput::from_omega(5e30, 0.25, a.omega));
    CHECK(oracle::rel(b.R, a.R) < 1e-14);
    CHECK(oracle::rel(b.v_R, a.v_R) < 1e-14);
    CHECK(oracle::rel(b.T, a.T) < 1e-14);
    CHECK(oracle::rel(b.r1, a.r1) < 1e-14);
    CHECK(oracle::rel(b.r2, a.r2) < 1e-14);
  }

  TEST_CASE("invalid orbits are rejected") {
    auto kind_of = [](const OrbitInput& in) {
      try {
        derive_orbit(in);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::ConfigError;
    };
    CHECK(kind_of(OrbitInput::from_period(0.0, 0.5, 10.0)) == ErrorKind::InvalidInput);
    CHECK(kind_of(OrbitInput::from_period(-1.0, 0.5, 10.0)) == ErrorKind::InvalidInput);
    CHECK(kind_of(OrbitInput::from_period(1e30, 0.5, 0.0)) == ErrorKind::InvalidInput);
    CHECK(kind_of(OrbitInput::from_omega(1e30, 0.5, -2.0)) == ErrorKind::InvalidInput);
    CHECK(kind_of(OrbitInput::from_period(1e30, 1.0, 10.0)) == ErrorKind::InvalidInput);
    CHECK(kind_of(OrbitInput::from_period(1e30, 0.0, 10.0)) == ErrorKind::InvalidInput);
    OrbitInput both = OrbitInput::from_period(1e30, 0.5, 10.0);
    both.omega = 1.0;
    CHECK(kind_of(both) == ErrorKind::InvalidInput);
    CHECK(kind_of(OrbitInput::from_period(1e40, 0.5, 1e-3)) == ErrorKind::OutOfRegime);
  }

  TEST_CASE("fast orbits carry the relativistic warning") {
    // v_R = 0.2: Omega = v^3 c^3 / (G M)
    const double mass = 2.0 * C::M_sun;
    const double omega = std::pow(0.2 * C::c, 3) / (C::G * mass);
    const auto orbit = derive_orbit(OrbitInput::from_omega(mass, 0.5, omega));
    CHECK(orbit.v_R == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(orbit.relativistic_warning);
  }
}
