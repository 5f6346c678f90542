#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hdp/chart.hpp"
#include "hdp/trees.hpp"

namespace hdp {

// Raw counts; metrics are derived so corpus totals aggregate exactly.
struct BracketCounts {
  std::int64_t matched = 0;
  std::int64_t predicted = 0;
  std::int64_t gold = 0;

  BracketCounts& operator+=(const BracketCounts& o);
  // Percentages. Both sides empty counts as a perfect score.
  double precision() const;
  double recall() const;
  double f1() const;
};

// Labeled spans excluding pre-terminals (the root span counts), matched as a
// multiset. Trees should be debinarized and unary-expanded.
BracketCounts bracket_counts(const ConstTree& pred, const ConstTree& gold);

struct BracketScore {
  double lp, lr, lf1;
};
BracketScore evalb(const ConstTree& pred, const ConstTree& gold);
BracketScore evalb_corpus(const std::vector<ConstTree>& pred, const std::vector<ConstTree>& gold);

struct AttachmentCounts {
  std::int64_t unlabeled = 0;
  std::int64_t labeled = 0;
  std::int64_t total = 0;

  AttachmentCounts& operator+=(const AttachmentCounts& o);
  double uas() const;
  double las() const;
};

const std::set<std::string>& default_punct_tags();

// Words whose tag is in `punct_tags` are skipped. pos_tags[m-1] tags word m.
AttachmentCounts attachment_counts(const DepTree& pred, const DepTree& gold, const std::vector<std::string>& pos_tags,
                                   const std::set<std::string>& punct_tags = default_punct_tags());

struct AttachmentScore {
  double uas, las;
};
AttachmentScore attachment_scores(const DepTree& pred, const DepTree& gold, const std::vector<std::string>& pos_tags,
                                  const std::set<std::string>& punct_tags = default_punct_tags());

// Percentage of positions with the same level class.
double head_level_accuracy(const std::vector<HeadLevel>& pred, const std::vector<HeadLevel>& gold);

// Secondary reading of head accuracy: among spans present in both joint
// trees, the percentage assigned the same head word.
double span_head_accuracy(const JointTree& pred, const JointTree& gold);

}  // namespace hdp
