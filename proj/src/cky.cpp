#include <limits>

#include "decode_util.hpp"
#include "hdp/decoders.hpp"

namespace hdp {

namespace {

struct CkyChart {
  int n;
  std::vector<double> best;   // best subtree score with any label
  std::vector<double> split;  // best split component, excluding the node label
  std::vector<int> split_k;

  std::size_t cell(int i, int j) const { return static_cast<std::size_t>(i) * (n + 1) + j; }
};

TreeNode backtrack(const CkyChart& c, const detail::LabelMaxima& lm, const ScoreChart& chart, int i, int j,
                   bool root) {
  const auto cell = c.cell(i, j);
  const int l = root ? lm.nonempty_arg[cell] : lm.any_arg[cell];
  if (j - i == 1) return make_preterminal(chart.labels_c()[l], j);
  const int k = c.split_k[cell];
  return make_node(chart.labels_c()[l],
                   {backtrack(c, lm, chart, i, k, false), backtrack(c, lm, chart, k, j, false)});
}

}  // namespace

DecodeResult cky_decode(const ScoreChart& chart) {
  const int n = chart.length();
  const auto lm = detail::label_maxima(chart);
  CkyChart c{n, {}, {}, {}};
  const std::size_t cells = static_cast<std::size_t>(n + 1) * (n + 1);
  c.best.assign(cells, 0.0);
  c.split.assign(cells, 0.0);
  c.split_k.assign(cells, -1);
  DecodeResult result;

  for (int i = 0; i < n; ++i) c.best[c.cell(i, i + 1)] = lm.any[lm.cell(i, i + 1)];
  result.stats.cells = n;
  for (int len = 2; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      double best = -std::numeric_limits<double>::infinity();
      int best_k = -1;
      for (int k = i + 1; k < j; ++k) {
        const double v = chart.span(i, k) + chart.span(k, j) + c.best[c.cell(i, k)] + c.best[c.cell(k, j)];
        if (v > best) {
          best = v;
          best_k = k;
        }
      }
      const auto cell = c.cell(i, j);
      c.split[cell] = best;
      c.split_k[cell] = best_k;
      c.best[cell] = lm.any[cell] + best;
      result.stats.cells += 1;
      result.stats.split_evals += len - 1;
    }

  const auto top = c.cell(0, n);
  ConstTree tree(backtrack(c, lm, chart, 0, n, true));
  result.const_tree = detail::finalize_const(tree);
  result.chart_tree = std::move(tree);
  result.score = lm.nonempty[top] + c.split[top];
  detail::settle_score(chart, result);
  return result;
}

}  // namespace hdp
