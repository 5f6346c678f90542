#include <limits>

#include "decode_util.hpp"
#include "hdp/decoders.hpp"
#include "hdp/head_scoring.hpp"

namespace hdp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// One table per span kind: complete (non-empty label, may serve as the head
// child) and incomplete (any label, serves as the modifier child). Each keeps
// the head word and split of its own best configuration.
struct SpanTable {
  std::vector<double> score;
  std::vector<int> head, split;
  std::vector<char> head_left;
};

struct H3nChart {
  int n;
  SpanTable complete, incomplete;

  std::size_t cell(int i, int j) const { return static_cast<std::size_t>(i) * (n + 1) + j; }
};

TreeNode backtrack(const H3nChart& c, const detail::LabelMaxima& lm, const ScoreChart& chart, int i, int j,
                   bool complete) {
  const auto cell = c.cell(i, j);
  const SpanTable& t = complete ? c.complete : c.incomplete;
  const int l = complete ? lm.nonempty_arg[cell] : lm.any_arg[cell];
  TreeNode node;
  if (j - i == 1) {
    node = make_preterminal(chart.labels_c()[l], j);
  } else {
    const int k = t.split[cell];
    const bool left = t.head_left[cell];
    node = make_node(chart.labels_c()[l],
                     {backtrack(c, lm, chart, i, k, left), backtrack(c, lm, chart, k, j, !left)});
  }
  node.head = t.head[cell];
  return node;
}

}  // namespace

DecodeResult h3n_decode(const ScoreChart& chart) {
  const int n = chart.length();
  const auto lm = detail::label_maxima(chart);
  const auto aug = detail::augmented_arcs(chart);
  std::vector<double> hscore(n + 1, 0.0);
  for (int w = 1; w <= n; ++w) hscore[w] = head_score(chart.head_level(w));

  H3nChart c{n, {}, {}};
  const std::size_t cells = static_cast<std::size_t>(n + 1) * (n + 1);
  for (SpanTable* t : {&c.complete, &c.incomplete}) {
    t->score.assign(cells, kNegInf);
    t->head.assign(cells, 0);
    t->split.assign(cells, -1);
    t->head_left.assign(cells, 0);
  }
  DecodeResult result;

  for (int w = 1; w <= n; ++w) {
    const auto cell = c.cell(w - 1, w);
    c.complete.score[cell] = lm.nonempty[cell];
    c.incomplete.score[cell] = lm.any[cell];
    c.complete.head[cell] = c.incomplete.head[cell] = w;
  }
  result.stats.cells = n;

  for (int len = 2; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      const auto cell = c.cell(i, j);
      for (int k = i + 1; k < j; ++k) {
        const auto left = c.cell(i, k);
        const auto right = c.cell(k, j);
        const int left_head = c.complete.head[left];
        const int right_head = c.complete.head[right];
        // ties keep the left head
        const bool head_left = !(hscore[right_head] > hscore[left_head]);
        double split = chart.span(i, k) + chart.span(k, j);
        int head;
        if (head_left) {
          head = left_head;
          split += c.complete.score[left] + c.incomplete.score[right] +
                   aug[left_head * (n + 1) + c.incomplete.head[right]];
        } else {
          head = right_head;
          split += c.incomplete.score[left] + c.complete.score[right] +
                   aug[right_head * (n + 1) + c.incomplete.head[left]];
        }
        const double as_complete = split + lm.nonempty[cell];
        if (as_complete > c.complete.score[cell]) {
          c.complete.score[cell] = as_complete;
          c.complete.head[cell] = head;
          c.complete.split[cell] = k;
          c.complete.head_left[cell] = head_left;
        }
        const double as_incomplete = split + lm.any[cell];
        if (as_incomplete > c.incomplete.score[cell]) {
          c.incomplete.score[cell] = as_incomplete;
          c.incomplete.head[cell] = head;
          c.incomplete.split[cell] = k;
          c.incomplete.head_left[cell] = head_left;
        }
      }
      result.stats.cells += 1;
      result.stats.split_evals += len - 1;
    }

  const auto top = c.cell(0, n);
  const int root = c.complete.head[top];
  detail::finish_joint(chart, backtrack(c, lm, chart, 0, n, true), result);
  result.score = c.complete.score[top] + aug[root];
  detail::settle_score(chart, result);
  return result;
}

}  // namespace hdp
