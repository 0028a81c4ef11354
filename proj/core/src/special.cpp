#include "pair_radiance/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pair_radiance/errors.hpp"

namespace pair_radiance {
namespace {

double bessel_series(int m, double x) {
  const double half = 0.5 * x;
  const double q = half * half;
  double term = 1.0;
  for (int k = 1; k <= m; ++k) term *= half / k;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<double>(k) * static_cast<double>(k + m));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's algorithm: backward recurrence from well above max(m, x),
// normalized by J_0 + 2 (J_2 + J_4 + ...) = 1. Requires x > 0.
double bessel_miller(int m, double x) {
  const int top = std::max(m, static_cast<int>(x)) + 60;
  const int start = top + (top % 2);
  const double two_over_x = 2.0 / x;
  double next = 0.0;     // J_{k+1}
  double current = 1e-30;  // J_k
  double result = 0.0;
  double norm = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = k * two_over_x * current - next;
    next = current;
    current = prev;  // now J_{k-1}
    const int idx = k - 1;
    if (idx == m) result = current;
    if (idx > 0 && idx % 2 == 0) norm += 2.0 * current;
    if (std::abs(current) > 1e250) {
      current *= 1e-250;
      next *= 1e-250;
      result *= 1e-250;
      norm *= 1e-250;
    }
  }
  norm += current;  // J_0
  return result / norm;
}

}  // namespace

double bessel_j(int m, double x) {
  if (std::isnan(x)) fail(ErrorKind::InvalidInput, "bessel_j: NaN argument");
  if (m < 0 || m > kMaxBesselOrder) {
    fail(ErrorKind::InvalidInput, "bessel_j: order " + std::to_string(m) + " outside [0, 20]");
  }
  if (!std::isfinite(x)) fail(ErrorKind::InvalidInput, "bessel_j: non-finite argument");
  const double ax = std::abs(x);
  const double value = ax <= 2.0 ? bessel_series(m, ax) : bessel_miller(m, ax);
  return (x < 0.0 && (m % 2 == 1)) ? -value : value;
}

double form_factor(double x) {
  if (std::isnan(x) || x < 0.0) fail(ErrorKind::InvalidInput, "form_factor: argument must be >= 0");
  if (x < 0.05) {
    const double x2 = x * x;
    return 1.0 - x2 / 10.0 + x2 * x2 / 280.0 - x2 * x2 * x2 / 15120.0;
  }
  return 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

PolarizationVector helicity_vector(const Vec3& khat, Helicity lam) {
  const double n = norm(khat);
  if (!(std::abs(n - 1.0) <= 1e-12)) {
    fail(ErrorKind::InvalidInput, "helicity_vector: direction is not a unit vector");
  }
  const double cos_t = std::clamp(khat.z, -1.0, 1.0);
  const double rho = std::hypot(khat.x, khat.y);
  const double cos_p = rho > 0.0 ? khat.x / rho : 1.0;
  const double sin_p = rho > 0.0 ? khat.y / rho : 0.0;
  const double sin_t = rho;

  // e^{i phi} (theta_hat + i phi_hat)
  const Vec3 theta_hat{cos_t * cos_p, cos_t * sin_p, -sin_t};
  const Vec3 phi_hat{-sin_p, cos_p, 0.0};
  const Complex phase{cos_p, sin_p};
  const double s = 1.0 / std::numbers::sqrt2;
  CVec3 e{phase * Complex{theta_hat.x, phi_hat.x} * s,
          phase * Complex{theta_hat.y, phi_hat.y} * s,
          phase * Complex{theta_hat.z, phi_hat.z} * s};
  if (lam == Helicity::R) {
    for (auto& c : e) c = std::conj(c);
  }
  return {e};
}

double polarization_overlap(const Vec3& khat1, Helicity lam1, const Vec3& khat2, Helicity lam2) {
  const auto e1 = helicity_vector(khat1, lam1);
  const auto e2 = helicity_vector(khat2, lam2);
  return std::norm(bilinear(e1.e, e2.e));
}

SuppressionRatio harmonic_suppression_ratio(int m, double v) {
  if (m < 1) fail(ErrorKind::InvalidInput, "harmonic_suppression_ratio: m must be >= 1");
  if (!(v > 0.0 && v < 1.0)) {
    fail(ErrorKind::InvalidInput, "harmonic_suppression_ratio: v must lie in (0,1)");
  }
  SuppressionRatio out;
  out.asymptotic = v * v * std::pow(1.0 + 1.0 / m, 2.0 * m + 2.0);
  if (m + 1 <= kMaxBesselOrder) {
    const double hi = (m + 1) * bessel_j(m + 1, (m + 1) * v);
    const double lo = m * bessel_j(m, m * v);
    out.exact = (hi * hi) / (lo * lo);
  }
  return out;
}

}  // namespace pair_radiance
