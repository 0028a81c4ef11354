#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pair_radiance/sources.hpp"

namespace pair_radiance::cli {

enum class Scenario { Sphere, BinaryDielectric, BinaryMetric, Compare };
std::string_view to_string(Scenario s);

enum class Format { Csv, Json };

struct Numerics {
  int order = 32;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;  // harmonic cutoff
  std::uint64_t events = 10'000;
  std::optional<int> threads;
  std::optional<int> harmonic;
  int points = 41;
};

struct OutputSpec {
  std::optional<std::string> path;
  Format format = Format::Csv;
};

struct ScanSpec {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  int points = 5;
  bool log_spacing = false;
};

struct RunConfig {
  Scenario scenario = Scenario::Sphere;
  std::optional<SphereConfig> sphere;
  std::optional<BinaryConfig> binary;
  bool explicit_densities = false;
  Numerics numerics;
  OutputSpec output;
  std::optional<ScanSpec> scan;
  AlphaVariant alpha_variant = AlphaVariant::Paper;
  /// FNV-1a of the canonical (key-sorted, compact) JSON text.
  std::uint64_t hash = 0;
};

/// Parses and validates a config document. Collects every violation and
/// throws config-error listing them with their key paths.
RunConfig parse_config_text(const std::string& text);

/// Reads path; io-error if it cannot be read.
RunConfig parse_config(const std::string& path);

std::uint64_t fnv1a(std::string_view bytes);

/// Binary config for a new orbit. Body densities are recomputed from the
/// masses unless they were given explicitly and the total mass is unchanged.
BinaryConfig binary_for_orbit(const RunConfig& cfg, const OrbitInput& orbit);

}  // namespace pair_radiance::cli
