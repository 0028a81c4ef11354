#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pair_radiance/phase_space.hpp"
#include "pair_radiance/sources.hpp"

namespace pair_radiance {

/// One unweighted photon pair. Wave vectors are in units of Omega/c, so
/// |l1| + |l2| = m.
struct PairEvent {
  std::uint64_t proposal = 0;
  int m = 1;
  Vec3 l1;
  Vec3 l2;
  HelicityPair helicities{Helicity::L, Helicity::R};
  double weight = 1.0;
};

struct EnvelopeOptions {
  int grid = 17;          // points per axis, endpoints included
  double safety = 1.5;
  int threads = 1;
};

struct Envelope {
  int m = 1;
  double bound = 0.0;        // safety x scanned maximum
  double scanned_max = 0.0;
  std::uint64_t n_scanned = 0;
};

/// The proposal target: l^2 (1-l)^2 times the channel rate density, i.e. the
/// integrand of the reduced (l, cos1, cos2, phi) parameterization.
double sampling_density(const Source& source, const PairGeometry& geom, HelicityPair channel,
                        int m);

/// Grid-scan upper bound of sampling_density over the reduced domain and all
/// allowed channels. Throws numerical-failure on a non-finite density.
Envelope build_envelope(const Source& source, int m, const EnvelopeOptions& opts = {});

struct SampleOptions {
  int threads = 1;
  std::uint64_t block = 4096;
  std::uint64_t max_proposals = 4'000'000'000ULL;
};

struct SampleResult {
  std::vector<PairEvent> events;
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  double envelope = 0.0;
  double acceptance_rate = 0.0;
  /// Total rate of harmonic m implied by the acceptance rate, s^-1.
  double rate_estimate = 0.0;
  double rate_std_error = 0.0;
};

/// Rejection sampling against the envelope. Proposal i draws from the
/// counter stream (seed, i), so the accepted stream is ordered by proposal
/// index and identical for any thread count. A density above the bound is a
/// hard error (numerical-failure).
SampleResult sample_pairs(const Source& source, int m, std::uint64_t n_events, std::uint64_t seed,
                          const Envelope& envelope, const SampleOptions& opts = {});

/// CSV with header event,m,l1x,l1y,l1z,l2x,l2y,l2z,hel1,hel2.
void write_events_csv(std::ostream& os, const std::vector<PairEvent>& events);

}  // namespace pair_radiance
