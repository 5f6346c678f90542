#pragma once

#include <cstddef>
#include <vector>

#include "hdp/chart.hpp"
#include "hdp/trees.hpp"

namespace hdp {
struct DecodeResult;
}

namespace hdp::detail {

// Best constituent label per span, with and without the empty label (index 0).
struct LabelMaxima {
  int n = 0;
  std::vector<double> any, nonempty;
  std::vector<int> any_arg, nonempty_arg;

  std::size_t cell(int i, int j) const { return static_cast<std::size_t>(i) * (n + 1) + j; }
};

LabelMaxima label_maxima(const ScoreChart& chart);

// arc(h, m) + best arc label score, indexed h * (n + 1) + m.
std::vector<double> augmented_arcs(const ScoreChart& chart);

// Fills the joint, constituent and dependency fields of `result` from a
// decoded head-annotated chart tree; arc labels are the per-arc argmax.
void finish_joint(const ScoreChart& chart, TreeNode root, DecodeResult& result);

// Debinarized, unary-expanded form of a decoded chart tree.
ConstTree finalize_const(const ConstTree& chart_tree);

// Moves the DP value to dp_score and sets score to the objective of the
// returned structure, so every decoder reports scores computed the same way.
void settle_score(const ScoreChart& chart, DecodeResult& result);

}  // namespace hdp::detail
