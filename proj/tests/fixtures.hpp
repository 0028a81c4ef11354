#pragma once

#include "pair_radiance/sources.hpp"

namespace fixtures {

using namespace pair_radiance;

/// Two solar masses, one hour, equal masses and radii of 10 km.
inline BinarySystem reference_binary(double a = 1e4, double kappa1 = 0.0, double kappa2 = 0.0) {
  const auto orbit = OrbitInput::from_period(2.0 * PhysicalConstants::M_sun, 0.5, 3600.0);
  return BinarySystem(BinaryConfig::with_consistent_densities(orbit, a, a, kappa1, kappa2));
}

/// Unequal binary used where mu = 1/2 cancellations must be avoided.
inline BinarySystem unequal_binary(double omega = 1e-3, double kappa1 = -0.3, double kappa2 = 0.2) {
  const auto orbit = OrbitInput::from_omega(3.0 * PhysicalConstants::M_sun, 0.4, omega);
  return BinarySystem(BinaryConfig::with_consistent_densities(orbit, 2e7, 1.2e7, kappa1, kappa2));
}

/// Small sphere with v_R = 1e-3.
inline SphereConfig reference_sphere(double v = 1e-3, double kappa = -0.5) {
  SphereConfig cfg;
  cfg.radius = 1.0;
  cfg.orbit_radius = 100.0;
  cfg.omega = v * PhysicalConstants::c / cfg.orbit_radius;
  cfg.kappa = kappa;
  return cfg;
}

}  // namespace fixtures
