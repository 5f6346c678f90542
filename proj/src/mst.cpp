#include <cmath>
#include <limits>

#include "hdp/decoders.hpp"

namespace hdp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Maximum spanning arborescence rooted at node 0 over a dense score matrix
// (w[u * size + v] scores u -> v). Returns the parent of every node.
std::vector<int> chu_liu_edmonds(const std::vector<double>& w, int size, DecodeStats& stats) {
  std::vector<int> parent(size, -1);
  for (int v = 1; v < size; ++v) {
    double best = kNegInf;
    for (int u = 0; u < size; ++u)
      if (u != v && w[u * size + v] > best) {
        best = w[u * size + v];
        parent[v] = u;
      }
  }
  stats.split_evals += static_cast<std::uint64_t>(size) * size;

  // find a cycle
  std::vector<int> color(size, 0);  // 0 unvisited, 1 on current walk, 2 done
  std::vector<int> cycle;
  color[0] = 2;
  for (int start = 1; start < size && cycle.empty(); ++start) {
    int v = start;
    while (color[v] == 0) {
      color[v] = 1;
      v = parent[v];
    }
    if (color[v] == 1) {
      int u = v;
      do {
        cycle.push_back(u);
        u = parent[u];
      } while (u != v);
    }
    for (v = start; color[v] == 1; v = parent[v]) color[v] = 2;
  }
  if (cycle.empty()) return parent;

  std::vector<char> in_cycle(size, 0);
  for (int v : cycle) in_cycle[v] = 1;
  std::vector<int> to_new(size, -1), to_old;
  for (int v = 0; v < size; ++v)
    if (!in_cycle[v]) {
      to_new[v] = static_cast<int>(to_old.size());
      to_old.push_back(v);
    }
  const int contracted = static_cast<int>(to_old.size());
  const int reduced = contracted + 1;
  std::vector<double> w2(static_cast<std::size_t>(reduced) * reduced, kNegInf);
  std::vector<int> enter(reduced, -1), leave(reduced, -1);
  for (int u = 0; u < size; ++u) {
    if (in_cycle[u]) continue;
    for (int v = 0; v < size; ++v) {
      if (u == v) continue;
      const double s = w[u * size + v];
      if (s == kNegInf) continue;
      if (!in_cycle[v]) {
        w2[to_new[u] * reduced + to_new[v]] = s;
      } else {
        const double gain = s - w[parent[v] * size + v];
        auto& slot = w2[to_new[u] * reduced + contracted];
        if (gain > slot) {
          slot = gain;
          enter[to_new[u]] = v;
        }
      }
    }
  }
  for (int v = 0; v < size; ++v) {
    if (in_cycle[v]) continue;
    for (int u : cycle) {
      const double s = w[u * size + v];
      auto& slot = w2[contracted * reduced + to_new[v]];
      if (s > slot || (s == slot && s != kNegInf && u < leave[to_new[v]])) {
        slot = s;
        leave[to_new[v]] = u;
      }
    }
  }

  const auto sub = chu_liu_edmonds(w2, reduced, stats);
  for (int v = 1; v < size; ++v) {
    if (in_cycle[v]) continue;
    const int p = sub[to_new[v]];
    parent[v] = p == contracted ? leave[to_new[v]] : to_old[p];
  }
  const int entry_from = sub[contracted];
  parent[enter[entry_from]] = to_old[entry_from];
  return parent;
}

}  // namespace

DecodeResult mst_decode(const ScoreChart& chart) {
  const int n = chart.length();
  const int size = n + 1;
  double max_abs = 0.0;
  for (int h = 0; h <= n; ++h)
    for (int m = 1; m <= n; ++m)
      if (h != m) max_abs = std::max(max_abs, std::abs(chart.arc(h, m)));
  // A penalty larger than any score gap between trees forces a single root arc.
  const double penalty = 2.0 * n * max_abs + 1.0;
  std::vector<double> w(static_cast<std::size_t>(size) * size, kNegInf);
  for (int h = 0; h <= n; ++h)
    for (int m = 1; m <= n; ++m)
      if (h != m) w[h * size + m] = chart.arc(h, m) - (h == 0 ? penalty : 0.0);

  DecodeResult result;
  auto parent = chu_liu_edmonds(w, size, result.stats);
  result.stats.cells = static_cast<std::uint64_t>(n) * n;
  std::vector<int> heads(parent.begin() + 1, parent.end());
  auto labels = assign_dep_labels(heads, chart);
  DepTree tree(std::move(heads), std::move(labels));
  result.score = dep_objective(chart, tree);
  result.dp_score = result.score;
  result.dep_tree = std::move(tree);
  return result;
}

}  // namespace hdp
