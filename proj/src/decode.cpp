#include "hdp/decoders.hpp"

namespace hdp {

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "cky") return Algorithm::kCky;
  if (name == "eisner") return Algorithm::kEisner;
  if (name == "mst") return Algorithm::kMst;
  if (name == "hpsg") return Algorithm::kHpsg;
  if (name == "h3n") return Algorithm::kH3n;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::kCky: return "cky";
    case Algorithm::kEisner: return "eisner";
    case Algorithm::kMst: return "mst";
    case Algorithm::kHpsg: return "hpsg";
    case Algorithm::kH3n: return "h3n";
  }
  return "?";
}

std::string_view algorithm_complexity(Algorithm algo) { return algo == Algorithm::kHpsg ? "O(n^5)" : "O(n^3)"; }

bool produces_constituents(Algorithm algo) {
  return algo == Algorithm::kCky || algo == Algorithm::kHpsg || algo == Algorithm::kH3n;
}

bool produces_dependencies(Algorithm algo) { return algo != Algorithm::kCky; }

DecodeResult decode(Algorithm algo, const ScoreChart& chart) {
  switch (algo) {
    case Algorithm::kCky: return cky_decode(chart);
    case Algorithm::kEisner: return eisner_decode(chart);
    case Algorithm::kMst: return mst_decode(chart);
    case Algorithm::kHpsg: return hpsg_decode(chart);
    case Algorithm::kH3n: return h3n_decode(chart);
  }
  return {};
}

}  // namespace hdp
