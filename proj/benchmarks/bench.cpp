#include <benchmark/benchmark.h>

#include "pair_radiance/quadrature.hpp"
#include "pair_radiance/random.hpp"
#include "pair_radiance/rates.hpp"
#include "pair_radiance/sampler.hpp"

using namespace pair_radiance;

namespace {

BinarySystem reference_binary() {
  const auto orbit = OrbitInput::from_period(2.0 * PhysicalConstants::M_sun, 0.5, 3600.0);
  return BinarySystem(BinaryConfig::with_consistent_densities(orbit, 1e4, 1e4, 0.0, 0.0));
}

void BM_Bessel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(m, x));
    x = x < 45.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_Bessel)->Arg(1)->Arg(2)->Arg(10);

void BM_MetricDensity(benchmark::State& state) {
  const auto source = Source::binary_metric(reference_binary());
  CounterStream rng(1, 0, 0);
  for (auto _ : state) {
    const double c1 = 2 * rng.uniform() - 1, c2 = 2 * rng.uniform() - 1;
    const double s1 = std::sqrt(1 - c1 * c1), s2 = std::sqrt(1 - c2 * c2);
    const double p = kTwoPi * rng.uniform();
    const auto g = detail::make_pair(rng.uniform(), {s1, 0, c1}, {s2 * std::cos(p), s2 * std::sin(p), c2});
    benchmark::DoNotOptimize(total_differential_rate(source, g, 2));
  }
}
BENCHMARK(BM_MetricDensity);

void BM_IntegrateIM(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_reduced(im_weight(), {n, n, n, 1}).value);
}
BENCHMARK(BM_IntegrateIM)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_MonteCarloIE(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mc_estimate(ie_weight(), 100000, 7).value);
}
BENCHMARK(BM_MonteCarloIE)->Unit(benchmark::kMillisecond);

void BM_SampleMetric(benchmark::State& state) {
  const auto source = Source::binary_metric(reference_binary());
  const auto env = build_envelope(source, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sample_pairs(source, 2, 1000, 3, env).accepted);
}
BENCHMARK(BM_SampleMetric)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
