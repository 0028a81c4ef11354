#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "pair_radiance/phase_space.hpp"

namespace pair_radiance {

enum class IntegrationMethod { NestedGauss, MonteCarlo };
std::string_view to_string(IntegrationMethod method);

struct IntegralEstimate {
  double value = 0.0;
  double std_error = 0.0;  // zero for the deterministic rule
  IntegrationMethod method = IntegrationMethod::NestedGauss;
  std::uint64_t n_evals = 0;
};

enum class WeightName { IE, IM, Unit, OmegaProduct, Custom };
std::string_view to_string(WeightName name);

/// Integrand over the reduced two-photon domain.
struct WeightSpec {
  WeightName name = WeightName::Custom;
  std::function<double(const PairGeometry&)> integrand;
};

WeightSpec unit_weight();
/// l1 l2
WeightSpec omega_product_weight();
/// (1 + cos^2 theta) l1 l2 Lperp^2
WeightSpec ie_weight();
/// (1 + cos theta)^2 l1 l2 Lperp^4 / L^4, finite at the back-to-back point.
WeightSpec im_weight();
WeightSpec custom_weight(std::function<double(const PairGeometry&)> integrand);

/// Integrand of im_weight. force_expansion evaluates 1 + cos(theta) through
/// (L^2 - (l1 - l2)^2) / (2 l1 l2) regardless of L.
double im_integrand(const PairGeometry& g, bool force_expansion = false);

struct QuadratureOptions {
  int order_l = 32;
  int order_cos = 32;
  int order_phi = 32;
  int threads = 1;

  QuadratureOptions doubled() const { return {2 * order_l, 2 * order_cos, 2 * order_phi, threads}; }
};

/// int d^3l1 d^3l2 delta(l1 + l2 - 1) w
///   = 2 pi int_0^1 dl l^2 (1-l)^2 int dcos1 dcos2 dphi w,
/// with photon 1 at azimuth 0 and phi the relative azimuth. Gauss-Legendre on
/// l and both cosines, periodic trapezoid on phi. Results do not depend on
/// the thread count. Throws numerical-failure on a non-finite sample.
IntegralEstimate integrate_reduced(const WeightSpec& w, const QuadratureOptions& opts = {});

/// Uniform Monte Carlo over (l, cos1, cos2, phi) with counter-based streams
/// keyed by (seed, sample index); bit-identical for any thread count.
/// Requires n_samples >= 1000.
IntegralEstimate mc_estimate(const WeightSpec& w, std::uint64_t n_samples, std::uint64_t seed,
                             int threads = 1);

struct DimensionlessIntegrals {
  IntegralEstimate ie;
  IntegralEstimate im;
};

/// Default settings: order 32 on every axis.
DimensionlessIntegrals dimensionless_integrals(const QuadratureOptions& opts = {});

}  // namespace pair_radiance
