#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdp/chart.hpp"
#include "hdp/trees.hpp"

namespace hdp {

struct DecodeStats {
  std::uint64_t cells = 0;        // chart cells filled
  std::uint64_t split_evals = 0;  // inner-loop evaluations (splits, or split x head pairs)
  std::uint64_t structures = 0;   // structures enumerated (brute force only)
};

struct DecodeResult {
  // Debinarized and unary-expanded; absent for dependency-only decoders.
  std::optional<ConstTree> const_tree;
  // Absent for constituent-only decoders.
  std::optional<DepTree> dep_tree;
  // The binarized tree as decoded (constituent and joint decoders).
  std::optional<ConstTree> chart_tree;
  // Joint decoders only.
  std::optional<JointTree> joint_tree;
  // Objective of the returned structure, recomputed from the chart.
  double score = 0.0;
  // Optimum as read off the dynamic program; equals `score` up to rounding.
  double dp_score = 0.0;
  DecodeStats stats;
};

enum class Algorithm { kCky, kEisner, kMst, kHpsg, kH3n };

// Accepts "cky", "eisner", "mst", "hpsg", "h3n".
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algo);
// "O(n^3)" or "O(n^5)".
std::string_view algorithm_complexity(Algorithm algo);
bool produces_constituents(Algorithm algo);
bool produces_dependencies(Algorithm algo);

DecodeResult decode(Algorithm algo, const ScoreChart& chart);

// Span-based CKY: the root takes a non-empty label, other spans any label.
DecodeResult cky_decode(const ScoreChart& chart);
// Single-root projective dependency tree maximizing the sum of arc scores.
DecodeResult eisner_decode(const ScoreChart& chart);
// Single-root maximum spanning arborescence (Chu-Liu-Edmonds).
DecodeResult mst_decode(const ScoreChart& chart);
// Exhaustive joint decoding over (span, head word) states, Theta(n^5).
DecodeResult hpsg_decode(const ScoreChart& chart);
// Joint decoding with head choice fixed by head scores, O(n^3).
DecodeResult h3n_decode(const ScoreChart& chart);

// Index of the best arc label for (h, m); ties go to the lower index.
int best_dep_label(const ScoreChart& chart, int h, int m);
// heads[m-1] -> label names.
std::vector<std::string> assign_dep_labels(const std::vector<int>& heads, const ScoreChart& chart);

// Objectives recomputed from a structure. Constituent objective: label score
// of every labeled node plus span score of every non-root labeled node.
// Joint objective adds arc + arc-label score for every arc incl. the root arc.
double const_objective(const ScoreChart& chart, const ConstTree& chart_tree);
double dep_objective(const ScoreChart& chart, const DepTree& tree);
double joint_objective(const ScoreChart& chart, const JointTree& tree);

// Exhaustive enumeration oracles.
inline constexpr int kBruteForceConstMax = 8;
inline constexpr int kBruteForceDepMax = 7;
inline constexpr int kBruteForceJointMax = 5;

DecodeResult brute_force_const(const ScoreChart& chart);
DecodeResult brute_force_dep(const ScoreChart& chart, bool projective);
DecodeResult brute_force_joint(const ScoreChart& chart);

}  // namespace hdp
