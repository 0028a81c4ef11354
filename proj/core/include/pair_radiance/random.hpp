#pragma once

#include <array>
#include <cstdint>

namespace pair_radiance {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Uniform doubles keyed by (seed, stream, index). The sequence for a given
/// key does not depend on any other draw, so samples can be generated in
/// any order or on any thread.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint32_t stream, std::uint64_t index);

  /// Uniform in the open interval (0, 1) with 53-bit resolution.
  double uniform();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

}  // namespace pair_radiance
