#pragma once

#include <span>
#include <vector>

#include "pair_radiance/sources.hpp"
#include "pair_radiance/vec3.hpp"

namespace pair_radiance {

/// Two photons sharing the energy of one harmonic: photon 1 carries the
/// fraction l, photon 2 the rest. The orbital plane is the x-y plane.
struct PairGeometry {
  double l = 0.5;
  Vec3 n1;
  Vec3 n2;
  double cos_theta = 1.0;
  double theta = 0.0;
  /// 1 + cos(theta); from (L^2 - (l1 - l2)^2) / (2 l1 l2) when L < 1e-6.
  double one_plus_cos = 2.0;
  double one_minus_cos = 0.0;
  double L = 1.0;      // |l n1 + (1 - l) n2|
  double Lperp = 1.0;  // in-plane part of the same vector
  double chi = 0.0;    // elevation of the pair's total wave vector above the plane
  bool chi_defined = true;
};

inline constexpr double kBackToBackThreshold = 1e-6;

/// Validating constructor: l in (0,1), unit directions within 1e-12.
PairGeometry reduce_pair(double l, const Vec3& n1, const Vec3& n2);

namespace detail {
/// Same as reduce_pair without validation, for quadrature kernels.
PairGeometry make_pair(double l, const Vec3& n1, const Vec3& n2);
}  // namespace detail

struct RateDensity {
  double value = 0.0;  // s^-1 per unit d^3l1 d^3l2 delta(l1 + l2 - 1)
  int m = 1;
  HelicityPair channel{Helicity::L, Helicity::R};
};

/// Pair rate density in the dimensionless wave vectors l_i = c k_i / (m Omega):
///   norm * overlap * omega1 omega2 |alpha_m(K)|^2 * (m Omega / c)^6 / (m Omega)
/// with K = (m Omega / c) (l n1 + (1 - l) n2). The energy delta function is
/// consumed by the parameterization. Disallowed channels give exactly 0.
RateDensity differential_rate(const Source& source, const PairGeometry& geom,
                              HelicityPair channel, int m);

/// differential_rate summed over the source's allowed channels.
double total_differential_rate(const Source& source, const PairGeometry& geom, int m);

struct AngularPoint {
  double chi = 0.0;
  double intensity = 0.0;
};

/// Rate per unit solid angle of the pair direction at elevation chi, summed
/// over channels. Integrates l and the opening angle with Gauss-Legendre of
/// the given order; the remaining rotation about the pair axis is trivial.
double angular_density(const Source& source, int m, double chi, int order = 48);

/// angular_density on a grid of chi in [-pi/2, pi/2], normalized to peak 1.
/// Throws invalid-input for an empty grid or chi outside the range.
std::vector<AngularPoint> angular_distribution(const Source& source, int m,
                                               std::span<const double> chi_grid, int order = 48);

struct SpectrumPoint {
  double omega1_over_omega = 0.0;
  double rate_per_omega1 = 0.0;  // s^-1 per (rad/s)
};

/// dRate/domega1 at fixed total energy m hbar Omega, marginal over both
/// photon directions. Grid points are omega1/Omega values in (0, m).
std::vector<SpectrumPoint> spectrum(const Source& source, int m,
                                    std::span<const double> omega1_grid, int order = 32,
                                    int threads = 1);

}  // namespace pair_radiance
