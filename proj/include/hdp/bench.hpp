#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdp/chart.hpp"
#include "hdp/decoders.hpp"

namespace hdp {

// Sentence lengths drawn uniformly from [lo, hi].
struct LengthBucket {
  int lo = 1, hi = 1;

  // "40" or "100-150". Throws std::invalid_argument on zero or reversed bounds.
  static LengthBucket parse(std::string_view text);
  std::string name() const;
};

struct BenchConfig {
  std::vector<LengthBucket> buckets;
  int sentences = 50;
  std::vector<Algorithm> algos{Algorithm::kHpsg, Algorithm::kH3n};
  std::uint64_t seed = 1;
  int repeats = 5;
  int threads = 1;
  bool force = false;  // run hpsg on buckets longer than kHpsgAutoSkip
  int const_labels = 6;
  int dep_labels = 4;
};

inline constexpr int kHpsgAutoSkip = 150;

struct BenchRow {
  std::string bucket;
  double mean_length = 0;
  Algorithm algo{};
  bool skipped = false;
  double seconds = 0;  // mean over repeats of the time to decode the whole bucket
  double speed = 0;    // sentences per second
  std::optional<double> speedup;  // hpsg time / h3n time, on h3n rows
  double score_sum = 0;           // deterministic checksum of decoded scores
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::string> notices;
};

// Seeded charts for one bucket; identical for identical (config, bucket index).
std::vector<ScoreChart> bench_charts(const BenchConfig& config, std::size_t bucket_index);

// Times only the decode calls. Throws std::logic_error if a chart is
// constructed inside a timed region.
BenchReport run_bench(const BenchConfig& config);

// Plain-text table with columns Length, Algo, Comp., Time, Speed, Speedup, ScoreSum.
std::string format_bench(const BenchReport& report);

}  // namespace hdp
