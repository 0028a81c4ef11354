#include "pair_radiance/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "pair_radiance/errors.hpp"
#include "pair_radiance/gauss_legendre.hpp"
#include "pair_radiance/parallel.hpp"
#include "pair_radiance/random.hpp"

namespace pair_radiance {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) fail(ErrorKind::InvalidInput, "gauss_legendre: order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = mid;
  return rule;
}

QuadratureRule periodic_trapezoid(int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "periodic_trapezoid: order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.assign(n, kTwoPi / n);
  for (int i = 0; i < n; ++i) rule.nodes[i] = kTwoPi * i / n;
  return rule;
}

std::string_view to_string(IntegrationMethod method) {
  return method == IntegrationMethod::NestedGauss ? "nested_gauss" : "monte_carlo";
}

std::string_view to_string(WeightName name) {
  switch (name) {
    case WeightName::IE: return "IE";
    case WeightName::IM: return "IM";
    case WeightName::Unit: return "Unit";
    case WeightName::OmegaProduct: return "OmegaProduct";
    case WeightName::Custom: return "Custom";
  }
  return "Custom";
}

WeightSpec unit_weight() {
  return {WeightName::Unit, [](const PairGeometry&) { return 1.0; }};
}

WeightSpec omega_product_weight() {
  return {WeightName::OmegaProduct, [](const PairGeometry& g) { return g.l * (1.0 - g.l); }};
}

WeightSpec ie_weight() {
  return {WeightName::IE, [](const PairGeometry& g) {
            return (1.0 + g.cos_theta * g.cos_theta) * g.l * (1.0 - g.l) * g.Lperp * g.Lperp;
          }};
}

double im_integrand(const PairGeometry& g, bool force_expansion) {
  if (g.L == 0.0) return 0.0;
  double one_plus_cos = g.one_plus_cos;
  const double l1 = g.l;
  const double l2 = 1.0 - g.l;
  if (force_expansion) {
    const double d = l1 - l2;
    one_plus_cos = (g.L * g.L - d * d) / (2.0 * l1 * l2);
  }
  const double ratio = g.Lperp / g.L;
  const double r2 = ratio * ratio;
  return one_plus_cos * one_plus_cos * l1 * l2 * r2 * r2;
}

WeightSpec im_weight() {
  return {WeightName::IM, [](const PairGeometry& g) { return im_integrand(g); }};
}

WeightSpec custom_weight(std::function<double(const PairGeometry&)> integrand) {
  return {WeightName::Custom, std::move(integrand)};
}

namespace {

[[noreturn]] void report_non_finite(double value, double l, double c1, double c2, double phi) {
  std::ostringstream os;
  os.precision(17);
  os << "non-finite integrand " << value << " at l=" << l << " cos1=" << c1 << " cos2=" << c2
     << " phi=" << phi;
  fail(ErrorKind::NumericalFailure, os.str());
}

PairGeometry node_geometry(double l, double c1, double s1, double c2, double s2, double cos_phi,
                           double sin_phi) {
  return detail::make_pair(l, {s1, 0.0, c1}, {s2 * cos_phi, s2 * sin_phi, c2});
}

double sine_of(double c) { return std::sqrt(std::max(0.0, 1.0 - c * c)); }

}  // namespace

IntegralEstimate integrate_reduced(const WeightSpec& w, const QuadratureOptions& opts) {
  if (!w.integrand) fail(ErrorKind::InvalidInput, "integrate_reduced: empty integrand");
  const auto lrule = gauss_legendre(opts.order_l, 0.0, 1.0);
  const auto crule = gauss_legendre(opts.order_cos, -1.0, 1.0);
  const auto prule = periodic_trapezoid(opts.order_phi);
  std::vector<double> sin_c(crule.nodes.size());
  for (std::size_t i = 0; i < sin_c.size(); ++i) sin_c[i] = sine_of(crule.nodes[i]);
  std::vector<double> cos_p(prule.nodes.size());
  std::vector<double> sin_p(prule.nodes.size());
  for (std::size_t i = 0; i < cos_p.size(); ++i) {
    cos_p[i] = std::cos(prule.nodes[i]);
    sin_p[i] = std::sin(prule.nodes[i]);
  }

  std::vector<double> slab(lrule.nodes.size(), 0.0);
  parallel_for(lrule.nodes.size(), opts.threads, [&](std::size_t i) {
    const double l = lrule.nodes[i];
    double sum = 0.0;
    for (std::size_t a = 0; a < crule.nodes.size(); ++a) {
      for (std::size_t b = 0; b < crule.nodes.size(); ++b) {
        double ring = 0.0;
        for (std::size_t q = 0; q < prule.nodes.size(); ++q) {
          const auto g = node_geometry(l, crule.nodes[a], sin_c[a], crule.nodes[b], sin_c[b],
                                       cos_p[q], sin_p[q]);
          const double v = w.integrand(g);
          if (!std::isfinite(v)) {
            report_non_finite(v, l, crule.nodes[a], crule.nodes[b], prule.nodes[q]);
          }
          ring += prule.weights[q] * v;
        }
        sum += crule.weights[a] * crule.weights[b] * ring;
      }
    }
    slab[i] = lrule.weights[i] * l * l * (1.0 - l) * (1.0 - l) * sum;
  });

  double total = 0.0;
  for (double s : slab) total += s;
  IntegralEstimate out;
  out.value = kTwoPi * total;
  out.method = IntegrationMethod::NestedGauss;
  out.n_evals = static_cast<std::uint64_t>(lrule.nodes.size()) * crule.nodes.size() *
                crule.nodes.size() * prule.nodes.size();
  return out;
}

IntegralEstimate mc_estimate(const WeightSpec& w, std::uint64_t n_samples, std::uint64_t seed,
                             int threads) {
  if (!w.integrand) fail(ErrorKind::InvalidInput, "mc_estimate: empty integrand");
  if (n_samples < 1000) fail(ErrorKind::InvalidInput, "mc_estimate: need at least 1000 samples");
  constexpr std::uint64_t kBlock = 4096;
  constexpr double kVolume = 1.0 * 2.0 * 2.0 * kTwoPi;
  const std::uint64_t n_blocks = (n_samples + kBlock - 1) / kBlock;

  struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;
  };
  std::vector<Moments> blocks(n_blocks);
  parallel_for(n_blocks, threads, [&](std::size_t b) {
    Moments mom;
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min(n_samples, begin + kBlock);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      CounterStream rng(seed, 0u, idx);
      const double l = rng.uniform();
      const double c1 = 2.0 * rng.uniform() - 1.0;
      const double c2 = 2.0 * rng.uniform() - 1.0;
      const double phi = kTwoPi * rng.uniform();
      const auto g = node_geometry(l, c1, sine_of(c1), c2, sine_of(c2), std::cos(phi), std::sin(phi));
      const double v = w.integrand(g);
      if (!std::isfinite(v)) report_non_finite(v, l, c1, c2, phi);
      const double h = kTwoPi * l * l * (1.0 - l) * (1.0 - l) * v;
      mom.count += 1.0;
      const double delta = h - mom.mean;
      mom.mean += delta / mom.count;
      mom.m2 += delta * (h - mom.mean);
    }
    blocks[b] = mom;
  });

  // Chan et al. pairwise combination, in block order.
  Moments all;
  for (const auto& mom : blocks) {
    if (mom.count == 0.0) continue;
    const double n = all.count + mom.count;
    const double delta = mom.mean - all.mean;
    all.mean += delta * mom.count / n;
    all.m2 += mom.m2 + delta * delta * all.count * mom.count / n;
    all.count = n;
  }
  const double variance = all.m2 / (all.count - 1.0);
  IntegralEstimate out;
  out.value = kVolume * all.mean;
  out.std_error = kVolume * std::sqrt(variance / all.count);
  out.method = IntegrationMethod::MonteCarlo;
  out.n_evals = n_samples;
  return out;
}

DimensionlessIntegrals dimensionless_integrals(const QuadratureOptions& opts) {
  return {integrate_reduced(ie_weight(), opts), integrate_reduced(im_weight(), opts)};
}

}  // namespace pair_radiance
