#include "hdp/chart.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "hdp/head_scoring.hpp"

namespace hdp {

namespace {

int index_of(const std::vector<std::string>& labels, std::string_view label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

void collect_labels(const TreeNode& node, std::set<std::string>& out) {
  if (node.is_terminal()) return;
  if (!node.is_empty_label()) out.insert(node.label);
  for (const auto& child : node.children) collect_labels(child, out);
}

void mark_gold(const TreeNode& node, ScoreChart& chart, double margin) {
  if (node.is_terminal()) return;
  const int l = chart.label_c_index(node.label);
  if (l < 0) throw std::invalid_argument("gold label '" + node.label + "' missing from the label set");
  chart.set_label(node.begin, node.end, l, margin);
  for (const auto& child : node.children) mark_gold(child, chart, margin);
}

}  // namespace

ScoreChart::ScoreChart(int n, std::vector<std::string> labels_c, std::vector<std::string> labels_d)
    : n_(n), labels_c_(std::move(labels_c)), labels_d_(std::move(labels_d)) {
  if (n_ < 1) throw std::invalid_argument("chart length must be at least 1");
  if (labels_c_.empty() || labels_c_.front() != kEmptyLabel)
    throw std::invalid_argument("constituent label set must start with the empty label");
  if (labels_c_.size() < 2) throw std::invalid_argument("constituent label set needs a non-empty label");
  if (labels_d_.empty()) throw std::invalid_argument("dependency label set is empty");
  const std::size_t cells = static_cast<std::size_t>(n_ + 1) * (n_ + 1);
  span_.assign(cells, 0.0);
  label_.assign(cells * labels_c_.size(), 0.0);
  arc_.assign(cells, 0.0);
  dep_label_.assign(cells * labels_d_.size(), 0.0);
  head_level_.assign(n_ + 1, HeadLevel::none());
  constructed_.fetch_add(1, std::memory_order_relaxed);
}

int ScoreChart::label_c_index(std::string_view label) const { return index_of(labels_c_, label); }
int ScoreChart::label_d_index(std::string_view label) const { return index_of(labels_d_, label); }

void ScoreChart::validate() const {
  auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
  };
  if (!finite(span_) || !finite(label_) || !finite(arc_) || !finite(dep_label_))
    throw std::invalid_argument("chart contains non-finite scores");
  for (int w = 1; w <= n_; ++w) {
    const auto l = head_level_[w];
    if (!l.is_none() && (l.value() < 1 || l.value() > kLevelCap))
      throw std::invalid_argument("head level out of range for word " + std::to_string(w));
  }
}

ScoreChart random_chart(int n, std::vector<std::string> labels_c, std::vector<std::string> labels_d,
                        std::uint64_t seed) {
  ScoreChart chart(n, std::move(labels_c), std::move(labels_d));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::uniform_int_distribution<int> level(1, kLevelCap);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      chart.set_span(i, j, uniform(rng));
      for (int l = 0; l < chart.num_labels_c(); ++l) chart.set_label(i, j, l, uniform(rng));
    }
  for (int h = 0; h <= n; ++h)
    for (int m = 1; m <= n; ++m) {
      if (h == m) continue;
      chart.set_arc(h, m, uniform(rng));
      for (int l = 0; l < chart.num_labels_d(); ++l) chart.set_dep_label(h, m, l, uniform(rng));
    }
  for (int w = 1; w <= n; ++w) chart.set_head_level(w, HeadLevel(level(rng)));
  return chart;
}

ScoreChart oracle_chart(const JointTree& gold, double margin, std::vector<std::string> labels_c,
                        std::vector<std::string> labels_d) {
  if (!(margin > 0.0)) throw std::invalid_argument("oracle margin must be positive");
  if (labels_c.empty()) {
    std::set<std::string> seen;
    collect_labels(gold.tree().root(), seen);
    labels_c.emplace_back(kEmptyLabel);
    labels_c.insert(labels_c.end(), seen.begin(), seen.end());
  }
  if (labels_d.empty()) {
    std::set<std::string> seen(gold.arc_labels().begin(), gold.arc_labels().end());
    labels_d.assign(seen.begin(), seen.end());
  }
  ScoreChart chart(gold.length(), std::move(labels_c), std::move(labels_d));
  mark_gold(gold.tree().root(), chart, margin);
  const DepTree dep = gold.dependencies();
  for (int m = 1; m <= dep.size(); ++m) {
    const int l = chart.label_d_index(dep.label(m));
    if (l < 0) throw std::invalid_argument("gold arc label '" + dep.label(m) + "' missing from the label set");
    chart.set_arc(dep.head(m), m, margin);
    chart.set_dep_label(dep.head(m), m, l, margin);
  }
  const auto levels = gold_head_levels(gold);
  for (int w = 1; w <= gold.length(); ++w) chart.set_head_level(w, levels[w - 1]);
  return chart;
}

std::vector<std::string> default_const_labels(int count) {
  static const char* const names[] = {"S",    "NP",   "VP",  "PP",   "ADJP", "ADVP", "SBAR",
                                      "QP",   "WHNP", "PRN", "NN",   "DT",   "JJ",   "VB",
                                      "IN",   "RB",   "PRP", "CD",   "CC",   "FRAG"};
  const int available = static_cast<int>(std::size(names));
  if (count < 1 || count > available)
    throw std::invalid_argument("constituent label count must be in 1.." + std::to_string(available));
  std::vector<std::string> out{std::string(kEmptyLabel)};
  for (int i = 0; i < count; ++i) out.emplace_back(names[i]);
  return out;
}

std::vector<std::string> default_dep_labels(int count) {
  static const char* const names[] = {"root", "nsubj", "obj",   "det",  "amod", "advmod",
                                      "nmod", "case",  "punct", "conj", "cc",   "mark"};
  const int available = static_cast<int>(std::size(names));
  if (count < 1 || count > available)
    throw std::invalid_argument("dependency label count must be in 1.." + std::to_string(available));
  return {names, names + count};
}

}  // namespace hdp
