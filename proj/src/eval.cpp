#include "hdp/eval.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace hdp {

namespace {

using LabeledSpan = std::tuple<int, int, std::string>;

void collect_brackets(const TreeNode& node, std::map<LabeledSpan, int>& out) {
  if (node.is_terminal() || node.is_preterminal()) return;
  ++out[{node.begin, node.end, node.label}];
  for (const auto& child : node.children) collect_brackets(child, out);
}

double percent(std::int64_t num, std::int64_t den) { return den == 0 ? 100.0 : 100.0 * num / den; }

void check_length(int a, int b) {
  if (a != b) throw std::invalid_argument("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

void collect_heads(const TreeNode& node, std::map<std::pair<int, int>, int>& out) {
  out[{node.begin, node.end}] = node.head;
  if (!node.is_preterminal())
    for (const auto& child : node.children) collect_heads(child, out);
}

}  // namespace

BracketCounts& BracketCounts::operator+=(const BracketCounts& o) {
  matched += o.matched;
  predicted += o.predicted;
  gold += o.gold;
  return *this;
}

double BracketCounts::precision() const { return predicted == 0 && gold == 0 ? 100.0 : percent(matched, predicted); }
double BracketCounts::recall() const { return predicted == 0 && gold == 0 ? 100.0 : percent(matched, gold); }

double BracketCounts::f1() const {
  const double p = precision(), r = recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

BracketCounts bracket_counts(const ConstTree& pred, const ConstTree& gold) {
  check_length(pred.length(), gold.length());
  std::map<LabeledSpan, int> p, g;
  collect_brackets(pred.root(), p);
  collect_brackets(gold.root(), g);
  BracketCounts c;
  for (const auto& [span, count] : p) {
    c.predicted += count;
    if (auto it = g.find(span); it != g.end()) c.matched += std::min(count, it->second);
  }
  for (const auto& [span, count] : g) c.gold += count;
  return c;
}

BracketScore evalb(const ConstTree& pred, const ConstTree& gold) {
  const auto c = bracket_counts(pred, gold);
  return {c.precision(), c.recall(), c.f1()};
}

BracketScore evalb_corpus(const std::vector<ConstTree>& pred, const std::vector<ConstTree>& gold) {
  if (pred.size() != gold.size()) throw std::invalid_argument("corpus sizes differ");
  BracketCounts c;
  for (std::size_t s = 0; s < pred.size(); ++s) c += bracket_counts(pred[s], gold[s]);
  return {c.precision(), c.recall(), c.f1()};
}

AttachmentCounts& AttachmentCounts::operator+=(const AttachmentCounts& o) {
  unlabeled += o.unlabeled;
  labeled += o.labeled;
  total += o.total;
  return *this;
}

double AttachmentCounts::uas() const { return percent(unlabeled, total); }
double AttachmentCounts::las() const { return percent(labeled, total); }

const std::set<std::string>& default_punct_tags() {
  static const std::set<std::string> tags{"``", "''", ":", ",", "."};
  return tags;
}

AttachmentCounts attachment_counts(const DepTree& pred, const DepTree& gold, const std::vector<std::string>& pos_tags,
                                   const std::set<std::string>& punct_tags) {
  check_length(pred.size(), gold.size());
  check_length(static_cast<int>(pos_tags.size()), gold.size());
  AttachmentCounts c;
  for (int m = 1; m <= gold.size(); ++m) {
    if (punct_tags.count(pos_tags[m - 1])) continue;
    ++c.total;
    if (pred.head(m) != gold.head(m)) continue;
    ++c.unlabeled;
    if (pred.label(m) == gold.label(m)) ++c.labeled;
  }
  return c;
}

AttachmentScore attachment_scores(const DepTree& pred, const DepTree& gold, const std::vector<std::string>& pos_tags,
                                  const std::set<std::string>& punct_tags) {
  const auto c = attachment_counts(pred, gold, pos_tags, punct_tags);
  return {c.uas(), c.las()};
}

double head_level_accuracy(const std::vector<HeadLevel>& pred, const std::vector<HeadLevel>& gold) {
  check_length(static_cast<int>(pred.size()), static_cast<int>(gold.size()));
  std::int64_t same = 0;
  for (std::size_t w = 0; w < gold.size(); ++w) same += pred[w] == gold[w];
  return percent(same, static_cast<std::int64_t>(gold.size()));
}

double span_head_accuracy(const JointTree& pred, const JointTree& gold) {
  check_length(pred.length(), gold.length());
  std::map<std::pair<int, int>, int> p, g;
  collect_heads(pred.tree().root(), p);
  collect_heads(gold.tree().root(), g);
  std::int64_t shared = 0, same = 0;
  for (const auto& [span, head] : g) {
    auto it = p.find(span);
    if (it == p.end()) continue;
    ++shared;
    same += it->second == head;
  }
  return percent(same, shared);
}

}  // namespace hdp
