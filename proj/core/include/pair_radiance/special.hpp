#pragma once

#include <optional>

#include "pair_radiance/vec3.hpp"

namespace pair_radiance {

/// L is positive helicity (left-handed circular polarization).
enum class Helicity { L, R };

constexpr Helicity flip(Helicity h) { return h == Helicity::L ? Helicity::R : Helicity::L; }
constexpr char to_char(Helicity h) { return h == Helicity::L ? 'L' : 'R'; }

struct PolarizationVector {
  CVec3 e{};
};

inline constexpr int kMaxBesselOrder = 20;
inline constexpr double kMaxBesselArgument = 50.0;

/// Bessel function of the first kind J_m(x), integer order 0 <= m <= 20.
///
/// Ascending series for |x| <= 2, Miller backward recurrence normalized with
/// J_0 + 2 sum J_2k = 1 otherwise. Accurate to ~1e-13 relative for |x| <= 50
/// away from zeros of J_m. Throws invalid-input on NaN, negative or too large
/// order.
double bessel_j(int m, double x);

/// Uniform-sphere form factor 3 (sin x - x cos x) / x^3, f(0) = 1.
/// Uses the even series below x = 0.05. Throws invalid-input for x < 0.
double form_factor(double x);

/// Circular polarization vector for unit direction khat.
///
/// e_L = e^{i phi} (theta_hat + i phi_hat) / sqrt(2) in spherical angles of
/// khat; e_R = conj(e_L). The phase makes e_L smooth at +z, where it equals
/// (x + i y)/sqrt(2). At the -z pole the convention branches; phi = 0 is used
/// there. Throws invalid-input if |khat| differs from 1 by more than 1e-12.
PolarizationVector helicity_vector(const Vec3& khat, Helicity lam);

/// |e_{lam1}(k1) . e_{lam2}(k2)|^2 from explicit vectors.
double polarization_overlap(const Vec3& khat1, Helicity lam1, const Vec3& khat2, Helicity lam2);

/// Closed form of the overlap: (1 - cos)^2 / 4 for equal helicities,
/// (1 + cos)^2 / 4 for opposite ones.
constexpr double overlap_from_cos(double cos_theta, bool same_helicity) {
  const double t = same_helicity ? 1.0 - cos_theta : 1.0 + cos_theta;
  return 0.25 * t * t;
}

struct SuppressionRatio {
  double asymptotic = 0.0;  // v^2 (1 + 1/m)^(2m+2)
  /// (m+1)^2 J_{m+1}^2((m+1)v) / (m^2 J_m^2(m v)); empty when m + 1 exceeds
  /// the supported Bessel order.
  std::optional<double> exact;
};

/// Ratio between consecutive harmonic intensities at orbital velocity v.
/// Requires m >= 1 and v in (0,1).
SuppressionRatio harmonic_suppression_ratio(int m, double v);

}  // namespace pair_radiance
