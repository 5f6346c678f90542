// Exhaustive enumeration over every structure of the search space. Label
// choices are maximized node by node, which is exact because the objective
// adds one label term per node.

#include <functional>
#include <limits>
#include <stdexcept>

#include "hdp/decoders.hpp"

namespace hdp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// All unlabeled binary trees over (i, j) whose leaves are pre-terminals.
std::vector<TreeNode> binary_shapes(int i, int j) {
  if (j - i == 1) return {make_preterminal("?", j)};
  std::vector<TreeNode> out;
  for (int k = i + 1; k < j; ++k)
    for (const auto& left : binary_shapes(i, k))
      for (const auto& right : binary_shapes(k, j)) out.push_back(make_node("?", {left, right}));
  return out;
}

std::string best_label(const ScoreChart& chart, int i, int j, bool allow_empty) {
  int best = allow_empty ? 0 : 1;
  for (int l = best + 1; l < chart.num_labels_c(); ++l)
    if (chart.label(i, j, l) > chart.label(i, j, best)) best = l;
  return chart.labels_c()[best];
}

void label_const(const ScoreChart& chart, TreeNode& node, bool root) {
  if (node.is_terminal()) return;
  node.label = best_label(chart, node.begin, node.end, !root);
  for (auto& child : node.children) label_const(chart, child, false);
}

// Assigns head words from the bit pattern (one bit per binary node, pre-order;
// set = head from the left child) and labels: head children and the root take
// non-empty labels, modifier children any label.
void annotate_joint(const ScoreChart& chart, TreeNode& node, unsigned pattern, int& bit, bool head_side) {
  node.label = best_label(chart, node.begin, node.end, !head_side);
  if (node.is_preterminal()) {
    node.head = node.end;
    return;
  }
  const bool left_head = (pattern >> bit++) & 1u;
  annotate_joint(chart, node.children[0], pattern, bit, left_head);
  annotate_joint(chart, node.children[1], pattern, bit, !left_head);
  node.head = node.children[left_head ? 0 : 1].head;
}

void check_bound(const ScoreChart& chart, int bound, const char* what) {
  if (chart.length() > bound)
    throw std::invalid_argument(std::string(what) + " enumeration limited to n <= " + std::to_string(bound));
}

}  // namespace

DecodeResult brute_force_const(const ScoreChart& chart) {
  check_bound(chart, kBruteForceConstMax, "constituent");
  DecodeResult result;
  result.score = kNegInf;
  for (auto shape : binary_shapes(0, chart.length())) {
    label_const(chart, shape, true);
    ConstTree tree(std::move(shape));
    const double v = const_objective(chart, tree);
    ++result.stats.structures;
    if (v > result.score) {
      result.score = v;
      result.chart_tree = std::move(tree);
    }
  }
  result.const_tree = expand_unary(debinarize(*result.chart_tree));
  result.dp_score = result.score;
  return result;
}

DecodeResult brute_force_dep(const ScoreChart& chart, bool projective) {
  check_bound(chart, kBruteForceDepMax, "dependency");
  const int n = chart.length();
  std::vector<int> heads(n, -1);
  DecodeResult result;
  result.score = kNegInf;
  std::vector<int> best_heads;

  std::function<void(int, int)> assign = [&](int m, int roots) {
    if (m > n) {
      if (roots != 1) return;
      const std::vector<std::string> labels(n, "_");
      DepTree tree(heads, labels);
      if (projective && !tree.is_projective()) return;
      ++result.stats.structures;
      double v = 0.0;
      for (int w = 1; w <= n; ++w) v += chart.arc(heads[w - 1], w);
      if (v > result.score) {
        result.score = v;
        best_heads = heads;
      }
      return;
    }
    for (int h = 0; h <= n; ++h) {
      if (h == m || (h == 0 && roots == 1)) continue;
      // following assigned heads upward from h must not reach m
      bool cycle = false;
      for (int cur = h; cur != 0 && cur != -1; cur = heads[cur - 1])
        if (cur == m) {
          cycle = true;
          break;
        }
      if (cycle) continue;
      heads[m - 1] = h;
      assign(m + 1, roots + (h == 0));
      heads[m - 1] = -1;
    }
  };
  assign(1, 0);
  auto labels = assign_dep_labels(best_heads, chart);
  result.dep_tree = DepTree(std::move(best_heads), std::move(labels));
  result.score = result.dp_score = dep_objective(chart, *result.dep_tree);
  return result;
}

DecodeResult brute_force_joint(const ScoreChart& chart) {
  check_bound(chart, kBruteForceJointMax, "joint");
  const int n = chart.length();
  DecodeResult result;
  result.score = kNegInf;
  for (const auto& shape : binary_shapes(0, n)) {
    for (unsigned pattern = 0; pattern < (1u << (n - 1)); ++pattern) {
      TreeNode node = shape;
      int bit = 0;
      annotate_joint(chart, node, pattern, bit, true);
      ConstTree tree(std::move(node));
      auto heads = JointTree(tree, std::vector<std::string>(n, "_")).dependencies().heads();
      JointTree joint(tree, assign_dep_labels(heads, chart));
      const double v = joint_objective(chart, joint);
      ++result.stats.structures;
      if (v > result.score) {
        result.score = v;
        result.joint_tree = std::move(joint);
      }
    }
  }
  const auto& best = *result.joint_tree;
  result.chart_tree = best.tree();
  result.const_tree = expand_unary(debinarize(best.tree()));
  result.dep_tree = best.dependencies();
  result.dp_score = result.score;
  return result;
}

}  // namespace hdp
