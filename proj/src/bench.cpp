#include "hdp/bench.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <thread>

namespace hdp {

namespace {

int parse_length(std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad bucket length '" + std::string(text) + "'");
  return v;
}

// Decodes every chart, returning the wall-clock seconds; scores land in `scores`.
double timed_pass(Algorithm algo, const std::vector<ScoreChart>& charts, int threads, std::vector<double>& scores) {
  scores.assign(charts.size(), 0.0);
  const auto constructed = ScoreChart::construction_count();
  const auto start = std::chrono::steady_clock::now();
  if (threads <= 1) {
    for (std::size_t s = 0; s < charts.size(); ++s) scores[s] = decode(algo, charts[s]).score;
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t)
      workers.emplace_back([&] {
        for (std::size_t s = next++; s < charts.size(); s = next++) scores[s] = decode(algo, charts[s]).score;
      });
    for (auto& w : workers) w.join();
  }
  const auto stop = std::chrono::steady_clock::now();
  if (ScoreChart::construction_count() != constructed)
    throw std::logic_error("chart constructed inside the timed region");
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

LengthBucket LengthBucket::parse(std::string_view text) {
  LengthBucket b;
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    b.lo = b.hi = parse_length(text);
  } else {
    b.lo = parse_length(text.substr(0, dash));
    b.hi = parse_length(text.substr(dash + 1));
  }
  if (b.lo < 1) throw std::invalid_argument("bucket lengths must be positive");
  if (b.hi < b.lo) throw std::invalid_argument("bucket '" + std::string(text) + "' is reversed");
  return b;
}

std::string LengthBucket::name() const {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
}

std::vector<ScoreChart> bench_charts(const BenchConfig& config, std::size_t bucket_index) {
  const auto& bucket = config.buckets.at(bucket_index);
  std::seed_seq seq{config.seed, static_cast<std::uint64_t>(bucket_index)};
  std::mt19937_64 rng(seq);
  const auto labels_c = default_const_labels(config.const_labels);
  const auto labels_d = default_dep_labels(config.dep_labels);
  std::vector<ScoreChart> charts;
  for (int s = 0; s < config.sentences; ++s) {
    const int n = std::uniform_int_distribution<int>(bucket.lo, bucket.hi)(rng);
    charts.push_back(random_chart(n, labels_c, labels_d, rng()));
  }
  return charts;
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.buckets.empty()) throw std::invalid_argument("no length buckets");
  if (config.sentences < 1 || config.repeats < 1) throw std::invalid_argument("sentences and repeats must be positive");
  BenchReport report;
  for (std::size_t b = 0; b < config.buckets.size(); ++b) {
    const auto& bucket = config.buckets[b];
    const auto charts = bench_charts(config, b);
    double total_length = 0;
    for (const auto& c : charts) total_length += c.length();
    std::optional<double> hpsg_seconds;
    for (Algorithm algo : config.algos) {
      BenchRow row;
      row.bucket = bucket.name();
      row.mean_length = total_length / charts.size();
      row.algo = algo;
      if (algo == Algorithm::kHpsg && bucket.hi > kHpsgAutoSkip && !config.force) {
        row.skipped = true;
        report.notices.push_back("skipping hpsg on bucket " + bucket.name() + " (longer than " +
                                 std::to_string(kHpsgAutoSkip) + "; use --force)");
        report.rows.push_back(row);
        continue;
      }
      std::vector<double> scores;
      double elapsed = 0;
      for (int r = 0; r < config.repeats; ++r) elapsed += timed_pass(algo, charts, config.threads, scores);
      row.seconds = elapsed / config.repeats;
      row.speed = row.seconds > 0 ? charts.size() / row.seconds : 0;
      for (double s : scores) row.score_sum += s;
      if (algo == Algorithm::kHpsg) hpsg_seconds = row.seconds;
      report.rows.push_back(row);
    }
    for (auto& row : report.rows)
      if (row.bucket == bucket.name() && row.algo == Algorithm::kH3n && hpsg_seconds && row.seconds > 0)
        row.speedup = *hpsg_seconds / row.seconds;
  }
  return report;
}

std::string format_bench(const BenchReport& report) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %7s %-6s %-7s %12s %12s %8s %16s\n", "Length", "AvgLen", "Algo", "Comp.",
                "Time(s)", "Speed(s/s)", "Speedup", "ScoreSum");
  out += buf;
  for (const auto& r : report.rows) {
    const std::string algo(algorithm_name(r.algo));
    const std::string comp(algorithm_complexity(r.algo));
    if (r.skipped) {
      std::snprintf(buf, sizeof buf, "%-10s %7.1f %-6s %-7s %12s %12s %8s %16s\n", r.bucket.c_str(), r.mean_length,
                    algo.c_str(), comp.c_str(), "skipped", "-", "-", "-");
    } else {
      char speedup[32] = "-";
      if (r.speedup) std::snprintf(speedup, sizeof speedup, "%.2fx", *r.speedup);
      std::snprintf(buf, sizeof buf, "%-10s %7.1f %-6s %-7s %12.4f %12.1f %8s %16.6f\n", r.bucket.c_str(),
                    r.mean_length, algo.c_str(), comp.c_str(), r.seconds, r.speed, speedup, r.score_sum);
    }
    out += buf;
  }
  for (const auto& n : report.notices) out += "note: " + n + "\n";
  return out;
}

}  // namespace hdp
