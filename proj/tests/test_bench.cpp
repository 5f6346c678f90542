#include "doctest.h"
#include "hdp/bench.hpp"

using namespace hdp;

TEST_CASE("length buckets") {
  CHECK(LengthBucket::parse("40").lo == 40);
  CHECK(LengthBucket::parse("40").hi == 40);
  CHECK(LengthBucket::parse("10-20").name() == "10-20");
  CHECK_THROWS(LengthBucket::parse("0"));
  CHECK_THROWS(LengthBucket::parse("20-10"));
  CHECK_THROWS(LengthBucket::parse("x"));
}

TEST_CASE("bench charts are seeded per bucket") {
  BenchConfig config;
  config.buckets = {LengthBucket::parse("5-9"), LengthBucket::parse("5-9")};
  config.sentences = 4;
  const auto a = bench_charts(config, 0);
  CHECK(a == bench_charts(config, 0));
  CHECK_FALSE(a == bench_charts(config, 1));
  for (const auto& c : a) {
    CHECK(c.length() >= 5);
    CHECK(c.length() <= 9);
  }
}

TEST_CASE("same seed gives identical scores; timing is the only difference") {
  BenchConfig config;
  config.buckets = {LengthBucket::parse("6-10"), LengthBucket::parse("12")};
  config.sentences = 5;
  config.repeats = 2;
  config.algos = {Algorithm::kHpsg, Algorithm::kH3n, Algorithm::kCky};
  const auto a = run_bench(config);
  config.threads = 3;
  const auto b = run_bench(config);
  REQUIRE(a.rows.size() == 6);
  REQUIRE(b.rows.size() == 6);
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    CHECK(a.rows[r].score_sum == b.rows[r].score_sum);
    CHECK(a.rows[r].bucket == b.rows[r].bucket);
  }
  CHECK(a.rows[1].speedup.has_value());
  CHECK_FALSE(a.rows[0].speedup.has_value());
  const auto table = format_bench(a);
  for (const char* col : {"Length", "Algo", "Comp.", "Time", "Speed", "Speedup"})
    CHECK(table.find(col) != std::string::npos);
}

TEST_CASE("hpsg is skipped on long buckets unless forced") {
  BenchConfig config;
  config.buckets = {LengthBucket::parse("151")};
  config.sentences = 1;
  config.repeats = 1;
  config.algos = {Algorithm::kHpsg, Algorithm::kH3n};
  const auto r = run_bench(config);
  CHECK(r.rows[0].skipped);
  CHECK_FALSE(r.rows[1].skipped);
  CHECK(r.notices.size() == 1);
}
