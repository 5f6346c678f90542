#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hdp/chart.hpp"
#include "hdp/trees.hpp"

namespace hdp {

using Span = std::pair<int, int>;

// Level of every node span of a joint tree: 1 at the root, parent + 1 below.
using SpanLevelMap = std::map<Span, int>;

SpanLevelMap span_levels(const JointTree& tree);

// Per word (index word-1): the smallest level among the spans the word heads,
// clamped to `cap`; none for words that head no span.
std::vector<HeadLevel> gold_head_levels(const JointTree& tree, int cap = kLevelCap);

// 1/level, 0 for none.
double head_score(HeadLevel level);
std::vector<double> head_scores(const std::vector<HeadLevel>& levels);

enum class HeadProperty {
  kHeadDominatesSpan = 1,   // head scores higher than every other word of its span
  kSharedHeadConsistent = 2,
  kSpanDominatesSubspan = 3,
};

struct HeadViolation {
  HeadProperty property;
  Span span;
  int witness;  // offending word

  friend bool operator==(const HeadViolation&, const HeadViolation&) = default;
};

// Checks the three head-score properties against the head assignment of
// `tree`. scores[w-1] is the score of word w. Ties between a head and a
// non-head word count as violations of property 1.
std::vector<HeadViolation> check_head_properties(const std::vector<double>& scores, const JointTree& tree);

}  // namespace hdp
