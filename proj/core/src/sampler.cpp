#include "pair_radiance/sampler.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "pair_radiance/errors.hpp"
#include "pair_radiance/parallel.hpp"
#include "pair_radiance/random.hpp"

namespace pair_radiance {
namespace {

constexpr double kBoxVolume = 1.0 * 2.0 * 2.0 * kTwoPi;
constexpr std::uint32_t kSamplerStream = 1;

PairGeometry box_point(double l, double c1, double c2, double phi) {
  const double s1 = std::sqrt(std::max(0.0, 1.0 - c1 * c1));
  const double s2 = std::sqrt(std::max(0.0, 1.0 - c2 * c2));
  return detail::make_pair(l, {s1, 0.0, c1}, {s2 * std::cos(phi), s2 * std::sin(phi), c2});
}

std::string shortest(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

double sampling_density(const Source& source, const PairGeometry& geom, HelicityPair channel,
                        int m) {
  const double l = geom.l;
  return l * l * (1.0 - l) * (1.0 - l) * differential_rate(source, geom, channel, m).value;
}

Envelope build_envelope(const Source& source, int m, const EnvelopeOptions& opts) {
  if (opts.grid < 3) fail(ErrorKind::InvalidInput, "build_envelope: grid must be >= 3");
  if (!(opts.safety >= 1.0)) fail(ErrorKind::InvalidInput, "build_envelope: safety must be >= 1");
  const int n = opts.grid;
  const int n_phi = 2 * ((n - 1) / 2);  // even, so phi = pi is a node
  const auto& channels = source.channel().allowed_pairs;
  std::vector<double> slab(n - 2, 0.0);
  parallel_for(slab.size(), opts.threads, [&](std::size_t i) {
    const double l = static_cast<double>(i + 1) / (n - 1);
    double best = 0.0;
    for (int a = 0; a < n; ++a) {
      const double c1 = -1.0 + 2.0 * a / (n - 1);
      for (int b = 0; b < n; ++b) {
        const double c2 = -1.0 + 2.0 * b / (n - 1);
        for (int q = 0; q < n_phi; ++q) {
          const auto g = box_point(l, c1, c2, kTwoPi * q / n_phi);
          for (const auto& ch : channels) {
            const double d = sampling_density(source, g, ch, m);
            if (!std::isfinite(d)) {
              fail(ErrorKind::NumericalFailure, "build_envelope: non-finite density during scan");
            }
            best = std::max(best, d);
          }
        }
      }
    }
    slab[i] = best;
  });
  Envelope env;
  env.m = m;
  env.scanned_max = *std::max_element(slab.begin(), slab.end());
  env.bound = opts.safety * env.scanned_max;
  env.n_scanned = static_cast<std::uint64_t>(n - 2) * n * n * n_phi * channels.size();
  return env;
}

SampleResult sample_pairs(const Source& source, int m, std::uint64_t n_events, std::uint64_t seed,
                          const Envelope& envelope, const SampleOptions& opts) {
  if (n_events < 1) fail(ErrorKind::InvalidInput, "sample_pairs: need at least one event");
  if (envelope.m != m) fail(ErrorKind::InvalidInput, "sample_pairs: envelope built for another harmonic");
  if (opts.block < 1) fail(ErrorKind::InvalidInput, "sample_pairs: block must be >= 1");
  SampleResult result;
  result.envelope = envelope.bound;
  if (envelope.bound <= 0.0) return result;

  const auto& channels = source.channel().allowed_pairs;
  const double n_channels = static_cast<double>(channels.size());
  const unsigned workers = resolve_threads(opts.threads);
  const std::size_t batch = std::max<std::size_t>(1, 4 * workers);

  std::uint64_t next_block = 0;
  bool done = false;
  while (!done) {
    const std::uint64_t first_proposal = next_block * opts.block;
    if (first_proposal >= opts.max_proposals) {
      fail(ErrorKind::NumericalFailure, "sample_pairs: proposal budget exhausted");
    }
    std::vector<std::vector<PairEvent>> accepted(batch);
    parallel_for(batch, opts.threads, [&](std::size_t k) {
      const std::uint64_t begin = (next_block + k) * opts.block;
      for (std::uint64_t idx = begin; idx < begin + opts.block; ++idx) {
        CounterStream rng(seed, kSamplerStream, idx);
        const double l = rng.uniform();
        const double c1 = 2.0 * rng.uniform() - 1.0;
        const double c2 = 2.0 * rng.uniform() - 1.0;
        const double phi = kTwoPi * rng.uniform();
        const double rotation = kTwoPi * rng.uniform();
        const auto which = std::min<std::size_t>(
            static_cast<std::size_t>(rng.uniform() * n_channels), channels.size() - 1);
        const double u = rng.uniform();
        const auto g = box_point(l, c1, c2, phi);
        const double d = sampling_density(source, g, channels[which], m);
        if (!(d <= envelope.bound)) {
          std::ostringstream os;
          os.precision(17);
          os << "sample_pairs: density " << d << " exceeds envelope " << envelope.bound
             << " at proposal " << idx;
          fail(ErrorKind::NumericalFailure, os.str());
        }
        if (u * envelope.bound < d) {
          PairEvent ev;
          ev.proposal = idx;
          ev.m = m;
          ev.l1 = rotate_z(g.n1, rotation) * (m * l);
          ev.l2 = rotate_z(g.n2, rotation) * (m * (1.0 - l));
          ev.helicities = channels[which];
          accepted[k].push_back(ev);
        }
      }
    });
    for (std::size_t k = 0; k < batch && !done; ++k) {
      for (const auto& ev : accepted[k]) {
        result.events.push_back(ev);
        if (result.events.size() == n_events) {
          result.proposals = ev.proposal + 1;
          done = true;
          break;
        }
      }
      if (!done) result.proposals = (next_block + k + 1) * opts.block;
    }
    next_block += batch;
  }

  result.accepted = result.events.size();
  const double p = static_cast<double>(result.accepted) / static_cast<double>(result.proposals);
  result.acceptance_rate = p;
  const double scale = kTwoPi * kBoxVolume * n_channels * envelope.bound;
  result.rate_estimate = scale * p;
  result.rate_std_error = scale * std::sqrt(p * (1.0 - p) / static_cast<double>(result.proposals));
  return result;
}

void write_events_csv(std::ostream& os, const std::vector<PairEvent>& events) {
  os << "event,m,l1x,l1y,l1z,l2x,l2y,l2z,hel1,hel2\n";
  std::uint64_t i = 0;
  for (const auto& ev : events) {
    os << i++ << ',' << ev.m << ',' << shortest(ev.l1.x) << ',' << shortest(ev.l1.y) << ','
       << shortest(ev.l1.z) << ',' << shortest(ev.l2.x) << ',' << shortest(ev.l2.y) << ','
       << shortest(ev.l2.z) << ',' << to_char(ev.helicities.first) << ','
       << to_char(ev.helicities.second) << '\n';
  }
}

}  // namespace pair_radiance
