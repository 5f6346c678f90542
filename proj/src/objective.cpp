#include <stdexcept>

#include "decode_util.hpp"
#include "hdp/decoders.hpp"

namespace hdp {

namespace {

double node_objective(const ScoreChart& chart, const TreeNode& node, bool root) {
  if (node.is_terminal()) return 0.0;
  const int l = chart.label_c_index(node.label);
  if (l < 0) throw std::invalid_argument("label '" + node.label + "' not in chart label set");
  double total = chart.label(node.begin, node.end, l);
  if (!root) total += chart.span(node.begin, node.end);
  for (const auto& child : node.children) total += node_objective(chart, child, false);
  return total;
}

}  // namespace

int best_dep_label(const ScoreChart& chart, int h, int m) {
  int best = 0;
  for (int l = 1; l < chart.num_labels_d(); ++l)
    if (chart.dep_label(h, m, l) > chart.dep_label(h, m, best)) best = l;
  return best;
}

std::vector<std::string> assign_dep_labels(const std::vector<int>& heads, const ScoreChart& chart) {
  std::vector<std::string> labels;
  labels.reserve(heads.size());
  for (std::size_t m = 1; m <= heads.size(); ++m)
    labels.push_back(chart.labels_d()[best_dep_label(chart, heads[m - 1], static_cast<int>(m))]);
  return labels;
}

double const_objective(const ScoreChart& chart, const ConstTree& chart_tree) {
  if (chart_tree.length() != chart.length()) throw std::invalid_argument("tree and chart lengths differ");
  return node_objective(chart, chart_tree.root(), true);
}

double dep_objective(const ScoreChart& chart, const DepTree& tree) {
  if (tree.size() != chart.length()) throw std::invalid_argument("tree and chart lengths differ");
  double total = 0.0;
  for (int m = 1; m <= tree.size(); ++m) total += chart.arc(tree.head(m), m);
  return total;
}

double joint_objective(const ScoreChart& chart, const JointTree& tree) {
  double total = const_objective(chart, tree.tree());
  const DepTree dep = tree.dependencies();
  for (int m = 1; m <= dep.size(); ++m) {
    const int l = chart.label_d_index(dep.label(m));
    if (l < 0) throw std::invalid_argument("arc label '" + dep.label(m) + "' not in chart label set");
    total += chart.arc(dep.head(m), m) + chart.dep_label(dep.head(m), m, l);
  }
  return total;
}

namespace detail {

LabelMaxima label_maxima(const ScoreChart& chart) {
  LabelMaxima lm;
  const int n = lm.n = chart.length();
  const std::size_t cells = static_cast<std::size_t>(n + 1) * (n + 1);
  lm.any.assign(cells, 0.0);
  lm.nonempty.assign(cells, 0.0);
  lm.any_arg.assign(cells, 0);
  lm.nonempty_arg.assign(cells, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto c = lm.cell(i, j);
      int best_any = 0, best_star = 1;
      for (int l = 1; l < chart.num_labels_c(); ++l) {
        const double v = chart.label(i, j, l);
        if (v > chart.label(i, j, best_any)) best_any = l;
        if (l > 1 && v > chart.label(i, j, best_star)) best_star = l;
      }
      lm.any[c] = chart.label(i, j, best_any);
      lm.any_arg[c] = best_any;
      lm.nonempty[c] = chart.label(i, j, best_star);
      lm.nonempty_arg[c] = best_star;
    }
  return lm;
}

std::vector<double> augmented_arcs(const ScoreChart& chart) {
  const int n = chart.length();
  std::vector<double> aug(static_cast<std::size_t>(n + 1) * (n + 1), 0.0);
  for (int h = 0; h <= n; ++h)
    for (int m = 1; m <= n; ++m)
      if (h != m) aug[h * (n + 1) + m] = chart.arc(h, m) + chart.dep_label(h, m, best_dep_label(chart, h, m));
  return aug;
}

ConstTree finalize_const(const ConstTree& chart_tree) { return expand_unary(debinarize(chart_tree)); }

void finish_joint(const ScoreChart& chart, TreeNode root, DecodeResult& result) {
  const int n = chart.length();
  ConstTree tree(std::move(root));
  const DepTree unlabeled = JointTree(tree, std::vector<std::string>(n, "_")).dependencies();
  auto labels = assign_dep_labels(unlabeled.heads(), chart);
  JointTree joint(tree, labels);
  result.dep_tree = DepTree(unlabeled.heads(), std::move(labels));
  result.const_tree = finalize_const(tree);
  result.chart_tree = std::move(tree);
  result.joint_tree = std::move(joint);
}

void settle_score(const ScoreChart& chart, DecodeResult& result) {
  result.dp_score = result.score;
  if (result.joint_tree)
    result.score = joint_objective(chart, *result.joint_tree);
  else if (result.chart_tree)
    result.score = const_objective(chart, *result.chart_tree);
  else
    result.score = dep_objective(chart, *result.dep_tree);
}

}  // namespace detail

}  // namespace hdp
