#include "hdp/head_scoring.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdp {

namespace {

struct HeadedSpan {
  Span span;
  int head;
  int level;
};

void collect(const TreeNode& node, int level, std::vector<HeadedSpan>& out) {
  if (node.is_terminal()) return;
  out.push_back({{node.begin, node.end}, node.head, level});
  for (const auto& child : node.children) collect(child, level + 1, out);
}

std::vector<HeadedSpan> headed_spans(const JointTree& tree) {
  std::vector<HeadedSpan> out;
  collect(tree.tree().root(), 1, out);
  return out;
}

}  // namespace

SpanLevelMap span_levels(const JointTree& tree) {
  SpanLevelMap levels;
  for (const auto& s : headed_spans(tree)) levels.emplace(s.span, s.level);
  return levels;
}

std::vector<HeadLevel> gold_head_levels(const JointTree& tree, int cap) {
  if (cap < 1) throw std::invalid_argument("level cap must be at least 1");
  std::vector<int> best(tree.length(), 0);
  for (const auto& s : headed_spans(tree)) {
    int& b = best[s.head - 1];
    if (b == 0 || s.level < b) b = s.level;
  }
  std::vector<HeadLevel> levels;
  levels.reserve(best.size());
  for (int b : best) levels.push_back(b == 0 ? HeadLevel::none() : HeadLevel(std::min(b, cap)));
  return levels;
}

double head_score(HeadLevel level) { return level.is_none() ? 0.0 : 1.0 / level.value(); }

std::vector<double> head_scores(const std::vector<HeadLevel>& levels) {
  std::vector<double> out;
  out.reserve(levels.size());
  for (auto l : levels) out.push_back(head_score(l));
  return out;
}

std::vector<HeadViolation> check_head_properties(const std::vector<double>& scores, const JointTree& tree) {
  if (static_cast<int>(scores.size()) != tree.length())
    throw std::invalid_argument("need one head score per word");
  const auto spans = headed_spans(tree);
  auto score = [&](int word) { return scores[word - 1]; };
  std::vector<HeadViolation> out;

  for (const auto& s : spans)
    for (int w = s.span.first + 1; w <= s.span.second; ++w)
      if (w != s.head && !(score(s.head) > score(w)))
        out.push_back({HeadProperty::kHeadDominatesSpan, s.span, w});

  for (std::size_t a = 0; a < spans.size(); ++a)
    for (std::size_t b = a + 1; b < spans.size(); ++b)
      if (spans[a].head == spans[b].head && score(spans[a].head) != score(spans[b].head))
        out.push_back({HeadProperty::kSharedHeadConsistent, spans[b].span, spans[b].head});

  for (const auto& outer : spans)
    for (const auto& inner : spans) {
      if (&outer == &inner) continue;
      const bool nested = outer.span.first <= inner.span.first && outer.span.second >= inner.span.second;
      if (nested && score(outer.head) < score(inner.head))
        out.push_back({HeadProperty::kSpanDominatesSubspan, outer.span, inner.head});
    }
  return out;
}

}  // namespace hdp
