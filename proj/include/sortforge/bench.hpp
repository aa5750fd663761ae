#pragma once

// Sequential timing of the sorting pipelines on seeded inputs.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sortforge/pipelines.hpp"

namespace sortforge {

enum class BenchInput { random, sorted };

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t reps = 3;
  std::uint64_t seed = 0;
  std::vector<Algorithm> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
  std::vector<Variant> variants{kAllVariants.begin(), kAllVariants.end()};
  BenchInput input = BenchInput::random;
};

struct BenchRecord {
  Algorithm algorithm;
  Variant variant;
  std::size_t n;
  std::size_t rep;
  std::chrono::nanoseconds nanos{0};
  /// Set instead of a timing when the run could not complete.
  std::optional<std::string> error;
};

struct BenchSummary {
  Algorithm algorithm;
  Variant variant;
  std::size_t n;
  std::chrono::nanoseconds median{0};
  /// Coefficient of variation of the successful reps.
  double cv = 0.0;
};

/// Full-range int64 keys from SplitMix64(seed ^ n), or 0..n-1 for sorted.
KeyList bench_input(BenchInput kind, std::size_t n, std::uint64_t seed);

/// Throws std::invalid_argument when sizes is empty or reps < 3.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);

/// Median of a non-empty sample.
std::chrono::nanoseconds median(std::vector<std::chrono::nanoseconds> sample);

inline constexpr double kNoisyCv = 0.20;

std::string bench_csv(const std::vector<BenchRecord>& records);
std::string bench_json(const std::vector<BenchRecord>& records);

}  // namespace sortforge
