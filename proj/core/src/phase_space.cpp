#include "pair_radiance/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pair_radiance/errors.hpp"
#include "pair_radiance/gauss_legendre.hpp"
#include "pair_radiance/parallel.hpp"

namespace pair_radiance {
namespace detail {

PairGeometry make_pair(double l, const Vec3& n1, const Vec3& n2) {
  PairGeometry g;
  g.l = l;
  g.n1 = n1;
  g.n2 = n2;
  const double l1 = l;
  const double l2 = 1.0 - l;
  const Vec3 total = l1 * n1 + l2 * n2;
  const double L2 = dot(total, total);
  g.L = std::sqrt(L2);
  g.Lperp = std::hypot(total.x, total.y);
  g.chi_defined = g.L > 0.0;
  g.chi = g.chi_defined ? std::atan2(total.z, g.Lperp) : 0.0;

  const double c = std::clamp(dot(n1, n2), -1.0, 1.0);
  if (g.L < kBackToBackThreshold) {
    // Near the back-to-back point 1 + cos(theta) suffers cancellation.
    const double d = l1 - l2;
    g.one_plus_cos = std::max(0.0, (L2 - d * d) / (2.0 * l1 * l2));
    g.cos_theta = g.one_plus_cos - 1.0;
  } else {
    g.cos_theta = c;
    g.one_plus_cos = 1.0 + c;
  }
  g.one_minus_cos = 1.0 - g.cos_theta;
  g.theta = std::acos(std::clamp(g.cos_theta, -1.0, 1.0));
  return g;
}

}  // namespace detail

PairGeometry reduce_pair(double l, const Vec3& n1, const Vec3& n2) {
  if (!(l > 0.0 && l < 1.0)) fail(ErrorKind::InvalidInput, "reduce_pair: l must lie in (0,1)");
  if (std::abs(norm(n1) - 1.0) > 1e-12 || std::abs(norm(n2) - 1.0) > 1e-12) {
    fail(ErrorKind::InvalidInput, "reduce_pair: directions must be unit vectors");
  }
  return detail::make_pair(l, n1, n2);
}

namespace {

struct HarmonicScale {
  double wave_number;  // m Omega / c
  double factor;       // (m Omega)^7 / c^6
};

HarmonicScale harmonic_scale(const Source& source, int m) {
  const double w = m * source.omega();
  const double k = w / PhysicalConstants::c;
  const double k3 = k * k * k;
  return {k, w * k3 * k3};
}

double overlap(const PairGeometry& g, HelicityPair ch) {
  const double t = ch.same() ? g.one_minus_cos : g.one_plus_cos;
  return 0.25 * t * t;
}

// |alpha_m|^2 * l1 l2 * (m Omega)^7 / c^6 at the pair's total wave vector.
double kinematic_part(const Source& source, const PairGeometry& g, int m) {
  if (source.kind() == SourceKind::BinaryMetric && g.L == 0.0) return 0.0;
  const auto scale = harmonic_scale(source, m);
  const double K = scale.wave_number * g.L;
  const double Kperp = std::min(scale.wave_number * g.Lperp, K);
  return source.amplitude_sq(m, K, Kperp) * g.l * (1.0 - g.l) * scale.factor;
}

}  // namespace

RateDensity differential_rate(const Source& source, const PairGeometry& geom,
                              HelicityPair channel, int m) {
  RateDensity out{0.0, m, channel};
  if (!source.channel().allows(channel)) return out;
  out.value = source.channel().rate_normalization * overlap(geom, channel) *
              kinematic_part(source, geom, m);
  return out;
}

double total_differential_rate(const Source& source, const PairGeometry& geom, int m) {
  double weight = 0.0;
  for (const auto& ch : source.channel().allowed_pairs) weight += overlap(geom, ch);
  if (weight == 0.0) return 0.0;
  return source.channel().rate_normalization * weight * kinematic_part(source, geom, m);
}

double angular_density(const Source& source, int m, double chi, int order) {
  const auto lrule = gauss_legendre(order, 0.0, 1.0);
  const auto crule = gauss_legendre(order, -1.0, 1.0);
  // K along the orbital axis has Kperp = 0 and J_m(0) = 0 for m >= 1.
  if (std::abs(std::abs(chi) - kPi / 2) < 1e-15 && m >= 1) return 0.0;
  const Vec3 axis{std::cos(chi), 0.0, std::sin(chi)};
  const Vec3 side{0.0, 1.0, 0.0};
  double sum = 0.0;
  for (std::size_t i = 0; i < lrule.nodes.size(); ++i) {
    const double l = lrule.nodes[i];
    const double l2 = 1.0 - l;
    double inner = 0.0;
    for (std::size_t j = 0; j < crule.nodes.size(); ++j) {
      const double c = crule.nodes[j];
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      // Split the opening angle so that l n1 + (1 - l) n2 points along axis.
      const double beta1 = std::atan2(l2 * s, l + l2 * c);
      const double beta2 = std::atan2(l * s, l2 + l * c);
      const Vec3 n1 = std::cos(beta1) * axis + std::sin(beta1) * side;
      const Vec3 n2 = std::cos(beta2) * axis - std::sin(beta2) * side;
      inner += crule.weights[j] * total_differential_rate(source, detail::make_pair(l, n1, n2), m);
    }
    sum += lrule.weights[i] * l * l * l2 * l2 * inner;
  }
  return kTwoPi * sum;
}

std::vector<AngularPoint> angular_distribution(const Source& source, int m,
                                               std::span<const double> chi_grid, int order) {
  if (chi_grid.empty()) fail(ErrorKind::InvalidInput, "angular_distribution: empty grid");
  std::vector<AngularPoint> out;
  out.reserve(chi_grid.size());
  double peak = 0.0;
  for (double chi : chi_grid) {
    if (!(chi >= -kPi / 2 - 1e-12 && chi <= kPi / 2 + 1e-12)) {
      fail(ErrorKind::InvalidInput, "angular_distribution: chi outside [-pi/2, pi/2]");
    }
    const double value = angular_density(source, m, chi, order);
    peak = std::max(peak, value);
    out.push_back({chi, value});
  }
  if (peak > 0.0) {
    for (auto& p : out) p.intensity /= peak;
  }
  return out;
}

std::vector<SpectrumPoint> spectrum(const Source& source, int m,
                                    std::span<const double> omega1_grid, int order, int threads) {
  for (double x : omega1_grid) {
    if (!(x > 0.0 && x < m)) fail(ErrorKind::InvalidInput, "spectrum: grid point outside (0, m)");
  }
  const auto crule = gauss_legendre(order, -1.0, 1.0);
  const auto prule = periodic_trapezoid(order);
  std::vector<double> sin_c(crule.nodes.size());
  for (std::size_t i = 0; i < sin_c.size(); ++i) {
    sin_c[i] = std::sqrt(std::max(0.0, 1.0 - crule.nodes[i] * crule.nodes[i]));
  }
  std::vector<SpectrumPoint> out(omega1_grid.size());
  const double energy = m * source.omega();
  parallel_for(omega1_grid.size(), threads, [&](std::size_t p) {
    const double l = omega1_grid[p] / m;
    double sum = 0.0;
    for (std::size_t a = 0; a < crule.nodes.size(); ++a) {
      const Vec3 n1{sin_c[a], 0.0, crule.nodes[a]};
      for (std::size_t b = 0; b < crule.nodes.size(); ++b) {
        double ring = 0.0;
        for (std::size_t q = 0; q < prule.nodes.size(); ++q) {
          const double phi = prule.nodes[q];
          const Vec3 n2{sin_c[b] * std::cos(phi), sin_c[b] * std::sin(phi), crule.nodes[b]};
          ring += prule.weights[q] * total_differential_rate(source, detail::make_pair(l, n1, n2), m);
        }
        sum += crule.weights[a] * crule.weights[b] * ring;
      }
    }
    const double dW_dl = kTwoPi * l * l * (1.0 - l) * (1.0 - l) * sum;
    out[p] = {omega1_grid[p], dW_dl / energy};
  });
  return out;
}

}  // namespace pair_radiance
