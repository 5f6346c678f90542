#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hdp/trees.hpp"

namespace hdp {

// Highest head level class; deeper spans are clamped to it.
inline constexpr int kLevelCap = 32;

// Head level class of a word: 1..cap, or none for a word that heads no span.
class HeadLevel {
 public:
  constexpr HeadLevel() = default;
  constexpr explicit HeadLevel(int level) : level_(level) {}
  static constexpr HeadLevel none() { return HeadLevel(); }

  constexpr bool is_none() const { return level_ == 0; }
  constexpr int value() const { return level_; }

  friend constexpr bool operator==(HeadLevel, HeadLevel) = default;

 private:
  int level_ = 0;
};

// Scores for one sentence of length n. Tables are dense and zero-initialized;
// the constituent label set starts with the empty label.
class ScoreChart {
 public:
  ScoreChart(int n, std::vector<std::string> labels_c, std::vector<std::string> labels_d);

  int length() const { return n_; }
  const std::vector<std::string>& labels_c() const { return labels_c_; }
  const std::vector<std::string>& labels_d() const { return labels_d_; }
  int num_labels_c() const { return static_cast<int>(labels_c_.size()); }
  int num_labels_d() const { return static_cast<int>(labels_d_.size()); }
  // -1 if absent.
  int label_c_index(std::string_view label) const;
  int label_d_index(std::string_view label) const;

  double span(int i, int j) const { return span_[cell(i, j)]; }
  double label(int i, int j, int l) const { return label_[cell(i, j) * labels_c_.size() + l]; }
  double arc(int h, int m) const { return arc_[cell(h, m)]; }
  double dep_label(int h, int m, int l) const { return dep_label_[cell(h, m) * labels_d_.size() + l]; }
  HeadLevel head_level(int word) const { return head_level_[word]; }

  void set_span(int i, int j, double v) { span_[cell(i, j)] = v; }
  void set_label(int i, int j, int l, double v) { label_[cell(i, j) * labels_c_.size() + l] = v; }
  void set_arc(int h, int m, double v) { arc_[cell(h, m)] = v; }
  void set_dep_label(int h, int m, int l, double v) { dep_label_[cell(h, m) * labels_d_.size() + l] = v; }
  void set_head_level(int word, HeadLevel level) { head_level_[word] = level; }

  // Throws std::invalid_argument on non-finite scores or out-of-range levels.
  void validate() const;

  // Number of ScoreChart objects constructed (not copied) in this process.
  static std::uint64_t construction_count() { return constructed_.load(); }

  friend bool operator==(const ScoreChart&, const ScoreChart&) = default;

 private:
  std::size_t cell(int a, int b) const { return static_cast<std::size_t>(a) * (n_ + 1) + b; }

  int n_;
  std::vector<std::string> labels_c_;
  std::vector<std::string> labels_d_;
  std::vector<double> span_;
  std::vector<double> label_;
  std::vector<double> arc_;
  std::vector<double> dep_label_;
  std::vector<HeadLevel> head_level_;

  static inline std::atomic<std::uint64_t> constructed_{0};
};

// Scores i.i.d. uniform in [-1, 1], head levels uniform in 1..kLevelCap.
ScoreChart random_chart(int n, std::vector<std::string> labels_c, std::vector<std::string> labels_d,
                        std::uint64_t seed);

// +margin on every gold labeled span, gold arc and gold arc label, 0
// elsewhere; head levels from the gold tree. Label sets default to the labels
// used by `gold` (empty label first, then sorted).
ScoreChart oracle_chart(const JointTree& gold, double margin, std::vector<std::string> labels_c = {},
                        std::vector<std::string> labels_d = {});

// Default label inventories for synthetic charts.
std::vector<std::string> default_const_labels(int count = 6);
std::vector<std::string> default_dep_labels(int count = 4);

struct NamedChart {
  std::string id;
  ScoreChart chart;
};

// Line-oriented chart files; see README for the format.
std::vector<NamedChart> read_charts(std::string_view text);
std::string write_charts(const std::vector<NamedChart>& charts);

}  // namespace hdp
