#include <limits>

#include "decode_util.hpp"
#include "hdp/decoders.hpp"

namespace hdp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Tables over words 1..n; [s][t] with s <= t. Left-facing items are headed
// by t, right-facing ones by s.
struct EisnerTables {
  int n;
  std::vector<double> complete_left, complete_right, incomplete_left, incomplete_right;
  std::vector<int> split_cl, split_cr, split_il, split_ir;

  std::size_t at(int s, int t) const { return static_cast<std::size_t>(s) * (n + 1) + t; }
};

void backtrack_complete(const EisnerTables& e, int s, int t, bool right, std::vector<int>& heads);

void backtrack_incomplete(const EisnerTables& e, int s, int t, bool right, std::vector<int>& heads) {
  const int r = right ? e.split_ir[e.at(s, t)] : e.split_il[e.at(s, t)];
  if (right)
    heads[t - 1] = s;
  else
    heads[s - 1] = t;
  backtrack_complete(e, s, r, true, heads);
  backtrack_complete(e, r + 1, t, false, heads);
}

void backtrack_complete(const EisnerTables& e, int s, int t, bool right, std::vector<int>& heads) {
  if (s == t) return;
  if (right) {
    const int r = e.split_cr[e.at(s, t)];
    backtrack_incomplete(e, s, r, true, heads);
    backtrack_complete(e, r, t, true, heads);
  } else {
    const int r = e.split_cl[e.at(s, t)];
    backtrack_complete(e, s, r, false, heads);
    backtrack_incomplete(e, r, t, false, heads);
  }
}

}  // namespace

DecodeResult eisner_decode(const ScoreChart& chart) {
  const int n = chart.length();
  EisnerTables e{n, {}, {}, {}, {}, {}, {}, {}, {}};
  const std::size_t cells = static_cast<std::size_t>(n + 1) * (n + 1);
  for (auto* t : {&e.complete_left, &e.complete_right, &e.incomplete_left, &e.incomplete_right})
    t->assign(cells, kNegInf);
  for (auto* t : {&e.split_cl, &e.split_cr, &e.split_il, &e.split_ir}) t->assign(cells, -1);
  for (int s = 1; s <= n; ++s) e.complete_left[e.at(s, s)] = e.complete_right[e.at(s, s)] = 0.0;

  DecodeResult result;
  for (int len = 1; len < n; ++len)
    for (int s = 1; s + len <= n; ++s) {
      const int t = s + len;
      const auto st = e.at(s, t);
      double best = kNegInf;
      int best_r = -1;
      for (int r = s; r < t; ++r) {
        const double v = e.complete_right[e.at(s, r)] + e.complete_left[e.at(r + 1, t)];
        if (v > best) {
          best = v;
          best_r = r;
        }
      }
      e.incomplete_left[st] = best + chart.arc(t, s);
      e.incomplete_right[st] = best + chart.arc(s, t);
      e.split_il[st] = e.split_ir[st] = best_r;

      best = kNegInf;
      for (int r = s; r < t; ++r) {
        const double v = e.complete_left[e.at(s, r)] + e.incomplete_left[e.at(r, t)];
        if (v > best) {
          best = v;
          best_r = r;
        }
      }
      e.complete_left[st] = best;
      e.split_cl[st] = best_r;

      best = kNegInf;
      for (int r = s + 1; r <= t; ++r) {
        const double v = e.incomplete_right[e.at(s, r)] + e.complete_right[e.at(r, t)];
        if (v > best) {
          best = v;
          best_r = r;
        }
      }
      e.complete_right[st] = best;
      e.split_cr[st] = best_r;
      result.stats.cells += 1;
      result.stats.split_evals += 3 * len;
    }

  double best = kNegInf;
  int root = 1;
  for (int r = 1; r <= n; ++r) {
    const double v = chart.arc(0, r) + e.complete_left[e.at(1, r)] + e.complete_right[e.at(r, n)];
    if (v > best) {
      best = v;
      root = r;
    }
  }
  std::vector<int> heads(n, 0);
  backtrack_complete(e, 1, root, false, heads);
  backtrack_complete(e, root, n, true, heads);
  heads[root - 1] = 0;
  auto labels = assign_dep_labels(heads, chart);
  result.dep_tree = DepTree(std::move(heads), std::move(labels));
  result.score = best;
  detail::settle_score(chart, result);
  return result;
}

}  // namespace hdp
