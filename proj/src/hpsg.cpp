#include <cstdint>
#include <limits>
#include <stdexcept>

#include "decode_util.hpp"
#include "hdp/decoders.hpp"

namespace hdp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Best m in [lo, hi] for row_a[m] + row_b[m]; the first maximum wins.
inline double best_sum(const double* row_a, const double* row_b, int lo, int hi, int& arg) {
  double best = kNegInf;
  for (int m = lo; m <= hi; ++m) {
    const double v = row_a[m] + row_b[m];
    if (v > best) {
      best = v;
      arg = m;
    }
  }
  return best;
}

// State (i, j, h): best subtree over span (i, j) headed by word h. The
// complete table requires a non-empty root label, the incomplete one allows
// any label; both share the best split.
struct HpsgChart {
  int n;
  std::vector<double> complete, incomplete;
  std::vector<std::int16_t> back_k, back_m;

  std::size_t cell(int i, int j) const { return static_cast<std::size_t>(i) * (n + 1) + j; }
  std::size_t state(int i, int j, int h) const { return cell(i, j) * (n + 1) + h; }
};

TreeNode backtrack(const HpsgChart& c, const detail::LabelMaxima& lm, const ScoreChart& chart, int i, int j,
                   int h, bool complete) {
  const auto cell = c.cell(i, j);
  const int l = complete ? lm.nonempty_arg[cell] : lm.any_arg[cell];
  TreeNode node;
  if (j - i == 1) {
    node = make_preterminal(chart.labels_c()[l], j);
  } else {
    const int k = c.back_k[c.state(i, j, h)];
    const int m = c.back_m[c.state(i, j, h)];
    if (h <= k)
      node = make_node(chart.labels_c()[l], {backtrack(c, lm, chart, i, k, h, true),
                                             backtrack(c, lm, chart, k, j, m, false)});
    else
      node = make_node(chart.labels_c()[l], {backtrack(c, lm, chart, i, k, m, false),
                                             backtrack(c, lm, chart, k, j, h, true)});
  }
  node.head = h;
  return node;
}

}  // namespace

DecodeResult hpsg_decode(const ScoreChart& chart) {
  const int n = chart.length();
  if (n >= 32767) throw std::invalid_argument("sentence too long for the exhaustive decoder");
  const int stride = n + 1;
  const auto lm = detail::label_maxima(chart);
  const auto aug = detail::augmented_arcs(chart);
  HpsgChart c{n, {}, {}, {}, {}};
  const std::size_t states = static_cast<std::size_t>(stride) * stride * stride;
  c.complete.assign(states, kNegInf);
  c.incomplete.assign(states, kNegInf);
  c.back_k.assign(states, -1);
  c.back_m.assign(states, -1);
  std::vector<double> inner(stride);
  std::vector<int> inner_k(stride), inner_m(stride);
  DecodeResult result;

  for (int w = 1; w <= n; ++w) {
    const auto cell = c.cell(w - 1, w);
    c.complete[c.state(w - 1, w, w)] = lm.nonempty[cell];
    c.incomplete[c.state(w - 1, w, w)] = lm.any[cell];
  }
  result.stats.cells = n;

  for (int len = 2; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      std::fill(inner.begin() + i + 1, inner.begin() + j + 1, kNegInf);
      for (int k = i + 1; k < j; ++k) {
        const double spans = chart.span(i, k) + chart.span(k, j);
        // head in the left part (i, k], modifier in (k, j]
        const double* right_incomplete = &c.incomplete[c.state(k, j, 0)];
        for (int h = i + 1; h <= k; ++h) {
          const double base = c.complete[c.state(i, k, h)] + spans;
          const double* arcs = &aug[h * stride];
          int m = 0;
          const double v = base + best_sum(right_incomplete, arcs, k + 1, j, m);
          if (v > inner[h]) {
            inner[h] = v;
            inner_k[h] = k;
            inner_m[h] = m;
          }
        }
        // head in the right part (k, j], modifier in (i, k]
        const double* left_incomplete = &c.incomplete[c.state(i, k, 0)];
        for (int h = k + 1; h <= j; ++h) {
          const double base = c.complete[c.state(k, j, h)] + spans;
          const double* arcs = &aug[h * stride];
          int m = 0;
          const double v = base + best_sum(left_incomplete, arcs, i + 1, k, m);
          if (v > inner[h]) {
            inner[h] = v;
            inner_k[h] = k;
            inner_m[h] = m;
          }
        }
        result.stats.split_evals += 2ull * (k - i) * (j - k);
      }
      const auto cell = c.cell(i, j);
      for (int h = i + 1; h <= j; ++h) {
        const auto s = c.state(i, j, h);
        c.complete[s] = inner[h] + lm.nonempty[cell];
        c.incomplete[s] = inner[h] + lm.any[cell];
        c.back_k[s] = static_cast<std::int16_t>(inner_k[h]);
        c.back_m[s] = static_cast<std::int16_t>(inner_m[h]);
      }
      result.stats.cells += 1;
    }

  double best = kNegInf;
  int root = 1;
  for (int h = 1; h <= n; ++h) {
    const double v = c.complete[c.state(0, n, h)] + aug[h];
    if (v > best) {
      best = v;
      root = h;
    }
  }
  detail::finish_joint(chart, backtrack(c, lm, chart, 0, n, root, true), result);
  result.score = best;
  detail::settle_score(chart, result);
  return result;
}

}  // namespace hdp
