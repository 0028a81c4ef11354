#pragma once

#include <numbers>
#include <optional>

namespace pair_radiance {

/// Pinned SI constants. Every reported number is computed from these values
/// and nothing else, so results are reproducible across platforms.
struct PhysicalConstants {
  static constexpr double G = 6.67430e-11;          // m^3 kg^-1 s^-2
  static constexpr double c = 299792458.0;          // m/s
  static constexpr double hbar = 1.054571817e-34;   // J s
  static constexpr double M_sun = 1.98892e30;       // kg
  /// Julian year, used for waiting times.
  static constexpr double seconds_per_year = 365.25 * 86400.0;
};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Binary orbit description. Exactly one of omega / period is set.
struct OrbitInput {
  double total_mass = 0.0;  // kg
  double mu = 0.5;          // mass fraction of body 1
  std::optional<double> omega;   // rad/s
  std::optional<double> period;  // s

  static OrbitInput from_period(double total_mass, double mu, double period);
  static OrbitInput from_omega(double total_mass, double mu, double omega);
};

struct DerivedOrbit {
  double total_mass = 0.0;  // kg
  double mu = 0.5;
  double R = 0.0;       // orbital separation, m
  double v_R = 0.0;     // R*Omega/c
  double T = 0.0;       // s
  double omega = 0.0;   // rad/s
  double r1 = 0.0;      // Schwarzschild radius of body 1, m
  double r2 = 0.0;      // Schwarzschild radius of body 2, m
  /// Set when v_R > 0.1; closed forms are nonrelativistic estimates.
  bool relativistic_warning = false;
};

/// Kepler orbit from mass and frequency. Throws invalid-input for
/// nonpositive mass or frequency, mu outside (0,1), and out-of-regime for v_R >= 1.
DerivedOrbit derive_orbit(const OrbitInput& input);

/// max(|v_R^3 c^3 / (G M Omega) - 1|, |R Omega / (c v_R) - 1|)
double check_kepler_identity(const DerivedOrbit& orbit);

inline constexpr double kRelativisticWarningThreshold = 0.1;

}  // namespace pair_radiance
