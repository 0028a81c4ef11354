#include "pair_radiance/units.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pair_radiance/errors.hpp"

namespace pair_radiance {

OrbitInput OrbitInput::from_period(double total_mass, double mu, double period) {
  OrbitInput in;
  in.total_mass = total_mass;
  in.mu = mu;
  in.period = period;
  return in;
}

OrbitInput OrbitInput::from_omega(double total_mass, double mu, double omega) {
  OrbitInput in;
  in.total_mass = total_mass;
  in.mu = mu;
  in.omega = omega;
  return in;
}

DerivedOrbit derive_orbit(const OrbitInput& input) {
  using C = PhysicalConstants;
  if (!(input.total_mass > 0.0) || !std::isfinite(input.total_mass)) {
    fail(ErrorKind::InvalidInput, "total mass must be positive and finite");
  }
  if (!(input.mu > 0.0 && input.mu < 1.0)) {
    fail(ErrorKind::InvalidInput, "mass fraction mu must lie in (0,1)");
  }
  if (input.omega.has_value() == input.period.has_value()) {
    fail(ErrorKind::InvalidInput, "exactly one of omega or period must be given");
  }

  DerivedOrbit out;
  out.total_mass = input.total_mass;
  out.mu = input.mu;
  if (input.omega) {
    if (!(*input.omega > 0.0) || !std::isfinite(*input.omega)) {
      fail(ErrorKind::InvalidInput, "orbital frequency must be positive and finite");
    }
    out.omega = *input.omega;
    out.T = kTwoPi / out.omega;
  } else {
    if (!(*input.period > 0.0) || !std::isfinite(*input.period)) {
      fail(ErrorKind::InvalidInput, "orbital period must be positive and finite");
    }
    out.T = *input.period;
    out.omega = kTwoPi / out.T;
  }

  const double gm = C::G * input.total_mass;
  out.R = std::cbrt(gm / (out.omega * out.omega));
  out.v_R = out.R * out.omega / C::c;
  if (!(out.v_R < 1.0)) {
    fail(ErrorKind::OutOfRegime,
         "orbital velocity v_R = " + std::to_string(out.v_R) + " is not below c");
  }
  out.relativistic_warning = out.v_R > kRelativisticWarningThreshold;

  const double rs = 2.0 * gm / (C::c * C::c);
  out.r1 = input.mu * rs;
  out.r2 = (1.0 - input.mu) * rs;
  return out;
}

double check_kepler_identity(const DerivedOrbit& orbit) {
  using C = PhysicalConstants;
  const double v3 = orbit.v_R * orbit.v_R * orbit.v_R;
  const double kepler =
      std::abs(v3 * C::c * C::c * C::c / (C::G * orbit.total_mass * orbit.omega) - 1.0);
  const double velocity = std::abs(orbit.R * orbit.omega / (C::c * orbit.v_R) - 1.0);
  return std::max(kepler, velocity);
}

}  // namespace pair_radiance
