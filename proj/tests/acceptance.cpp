// Acceptance checks, one line per criterion. `acceptance` runs all of them;
// `acceptance N` runs criterion N only. Exit status is nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hdp/bench.hpp"
#include "hdp/chart.hpp"
#include "hdp/convert.hpp"
#include "hdp/decoders.hpp"
#include "hdp/eval.hpp"
#include "hdp/head_scoring.hpp"
#include "hdp/io.hpp"
#include "hdp/synth.hpp"
#include "oracles.hpp"

using namespace hdp;

namespace {

// Pinned tolerances.
constexpr double kRescoreTol = 1e-9;
constexpr double kChartFileTol = 1e-9;
constexpr double kOracleMinutes = 5.0;
constexpr double kRecoveryMinutes = 1.0;
constexpr double kBenchMinutes = 30.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + " | " + std::to_string(failures_) + " failure(s): " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

double minutes_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / 60.0;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

ScoreChart chart(int n, std::uint64_t seed) { return random_chart(n, default_const_labels(), default_dep_labels(), seed); }

std::vector<std::string> gold_const_labels() {
  const auto all = default_const_labels();
  return {all.begin() + 1, all.end()};
}

// --- 1 ----------------------------------------------------------------------

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  constexpr int kCharts = 250;
  Check check;
  auto rescored = [&](const DecodeResult& r, double independent, const std::string& tag) {
    check.expect(std::abs(r.dp_score - r.score) <= kRescoreTol, tag + " dp/objective gap");
    check.expect(std::abs(independent - r.score) <= kRescoreTol, tag + " independent rescoring");
  };
  for (int s = 0; s < kCharts; ++s) {
    const std::uint64_t seed = 1000 + s;
    const std::string id = " seed " + std::to_string(seed);
    {
      const auto c = chart(1 + s % 6, seed);
      const auto r = cky_decode(c);
      check.expect(r.score == brute_force_const(c).score, "cky" + id);
      check.expect(std::abs(r.score - oracle::best_const_score(c)) <= kRescoreTol, "cky vs test oracle" + id);
      rescored(r, oracle::score_tree(c, r.chart_tree->root()), "cky" + id);
    }
    {
      const auto c = chart(1 + s % 7, seed);
      const auto r = eisner_decode(c);
      check.expect(r.score == brute_force_dep(c, true).score, "eisner" + id);
      check.expect(std::abs(r.score - oracle::best_dep_score(c, true)) <= kRescoreTol, "eisner vs test oracle" + id);
      rescored(r, oracle::score_arcs(c, *r.dep_tree), "eisner" + id);
    }
    {
      const auto c = chart(1 + s % 6, seed);
      const auto r = mst_decode(c);
      check.expect(r.score == brute_force_dep(c, false).score, "mst" + id);
      check.expect(std::abs(r.score - oracle::best_dep_score(c, false)) <= kRescoreTol, "mst vs test oracle" + id);
      rescored(r, oracle::score_arcs(c, *r.dep_tree), "mst" + id);
    }
    {
      const auto c = chart(1 + s % 5, seed);
      const auto r = hpsg_decode(c);
      check.expect(r.score == brute_force_joint(c).score, "hpsg" + id);
      check.expect(std::abs(r.score - oracle::best_joint_score(c)) <= kRescoreTol, "hpsg vs test oracle" + id);
      rescored(r,
               oracle::score_tree(c, r.joint_tree->tree().root()) + oracle::score_labeled_arcs(c, *r.dep_tree),
               "hpsg" + id);
    }
  }
  const double minutes = minutes_since(start);
  check.expect(minutes < kOracleMinutes, "took " + fmt("%.2f", minutes) + " min");
  return check.done(std::to_string(kCharts) + " charts per decoder (cky n<=6, eisner n<=7, mst n<=6, hpsg n<=5), " +
                    fmt("%.1f", minutes * 60) + " s");
}

// --- 2 ----------------------------------------------------------------------

Outcome gold_recovery() {
  const auto start = std::chrono::steady_clock::now();
  constexpr int kTrees = 500;
  Check check;
  for (auto algo : {Algorithm::kHpsg, Algorithm::kH3n}) {
    std::vector<ConstTree> pred_c, gold_c;
    AttachmentCounts att;
    std::vector<HeadLevel> pred_l, gold_l;
    int exact = 0;
    for (int s = 0; s < kTrees; ++s) {
      const auto gold = random_joint_tree(1 + s % 10, gold_const_labels(), default_dep_labels(), 5000 + s);
      const auto r = decode(algo, oracle_chart(gold, 1.0));
      exact += *r.joint_tree == gold;
      pred_c.push_back(*r.const_tree);
      gold_c.push_back(expand_unary(debinarize(gold.tree())));
      att += attachment_counts(*r.dep_tree, gold.dependencies(), std::vector<std::string>(gold.length(), "_"), {});
      const auto pl = gold_head_levels(*r.joint_tree), gl = gold_head_levels(gold);
      pred_l.insert(pred_l.end(), pl.begin(), pl.end());
      gold_l.insert(gold_l.end(), gl.begin(), gl.end());
    }
    const std::string name(algorithm_name(algo));
    const auto lf1 = fmt("%.2f", evalb_corpus(pred_c, gold_c).lf1);
    check.expect(exact == kTrees, name + " exact " + std::to_string(exact) + "/" + std::to_string(kTrees));
    check.expect(lf1 == "100.00", name + " LF1 " + lf1);
    check.expect(fmt("%.2f", att.uas()) == "100.00" && fmt("%.2f", att.las()) == "100.00", name + " UAS/LAS");
    check.expect(fmt("%.2f", head_level_accuracy(pred_l, gold_l)) == "100.00", name + " HAcc");
  }
  const double minutes = minutes_since(start);
  check.expect(minutes < kRecoveryMinutes, "took " + fmt("%.2f", minutes) + " min");
  return check.done(std::to_string(kTrees) + " gold trees n<=10, hpsg and h3n: exact, LF1=UAS=LAS=HAcc=100.00, " +
                    fmt("%.1f", minutes * 60) + " s");
}

// --- 3 ----------------------------------------------------------------------

Outcome dominance() {
  Check check;
  int charts = 0;
  for (int s = 0; s < 200; ++s) {
    auto c = chart(1 + s % 5, 9000 + s);
    const auto exact = hpsg_decode(c);
    check.expect(h3n_decode(c).score <= exact.score, "h3n above hpsg, seed " + std::to_string(9000 + s));
    const auto levels = gold_head_levels(*exact.joint_tree);
    for (int w = 1; w <= c.length(); ++w) c.set_head_level(w, levels[w - 1]);
    check.expect(h3n_decode(c).score == exact.score, "h3n != hpsg under optimum levels, seed " + std::to_string(9000 + s));
    ++charts;
  }
  for (int s = 0; s < 100; ++s) {
    const auto c = chart(6 + s % 15, 9500 + s);
    check.expect(h3n_decode(c).score <= hpsg_decode(c).score, "h3n above hpsg, seed " + std::to_string(9500 + s));
    ++charts;
  }
  return check.done(std::to_string(charts) +
                    " charts: h3n <= hpsg everywhere; equal under levels of the hpsg optimum (200, n<=5)");
}

// --- 4 ----------------------------------------------------------------------

// Every binary tree over (i, j) with every head choice; one label.
std::vector<TreeNode> headed_trees(int i, int j) {
  if (j - i == 1) {
    auto p = make_preterminal("X", j);
    p.head = j;
    return {p};
  }
  std::vector<TreeNode> out;
  for (int k = i + 1; k < j; ++k)
    for (const auto& l : headed_trees(i, k))
      for (const auto& r : headed_trees(k, j))
        for (int side = 0; side < 2; ++side) {
          auto node = make_node("X", {l, r});
          node.head = side == 0 ? l.head : r.head;
          out.push_back(std::move(node));
        }
  return out;
}

Outcome head_properties() {
  Check check;
  int trees = 0, flagged = 0, counterexamples = 0;
  for (int n = 1; n <= 6; ++n)
    for (auto& root : headed_trees(0, n)) {
      JointTree t(ConstTree(root), std::vector<std::string>(n, "x"));
      const auto scores = head_scores(gold_head_levels(t));
      const auto v = check_head_properties(scores, t);
      check.expect(v.empty(), "violation on " + t.tree().str());
      ++trees;
      if (n < 2) continue;
      // swap the root head with another word; uniform scores
      const int h = root.head, other = h == 1 ? 2 : 1;
      auto swapped = scores;
      std::swap(swapped[h - 1], swapped[other - 1]);
      std::vector<double> uniform(n, 0.5);
      for (const auto& bad : {swapped, uniform}) {
        ++counterexamples;
        const auto found = check_head_properties(bad, t);
        bool root_prop1 = false;
        for (const auto& x : found)
          root_prop1 |= x.property == HeadProperty::kHeadDominatesSpan && x.span == Span{0, n};
        flagged += root_prop1;
        check.expect(root_prop1, "counterexample missed on " + t.tree().str());
      }
    }
  return check.done(std::to_string(trees) + " headed trees n<=6 with zero violations; " + std::to_string(flagged) +
                    "/" + std::to_string(counterexamples) + " counterexamples flagged");
}

// --- 5 ----------------------------------------------------------------------

Outcome complexity_scaling() {
  const auto start = std::chrono::steady_clock::now();
  BenchConfig config;
  config.buckets = {LengthBucket::parse("20-34"), LengthBucket::parse("50"), LengthBucket::parse("100"),
                    LengthBucket::parse("120-134"), LengthBucket::parse("200")};
  config.sentences = 50;
  config.repeats = 5;
  config.threads = 1;
  config.seed = 2024;
  const auto report = run_bench(config);
  std::cout << format_bench(report);
  auto seconds = [&](const std::string& bucket, Algorithm algo) {
    for (const auto& r : report.rows)
      if (r.bucket == bucket && r.algo == algo && !r.skipped) return r.seconds;
    return std::nan("");
  };
  auto speedup = [&](const std::string& bucket) {
    return seconds(bucket, Algorithm::kHpsg) / seconds(bucket, Algorithm::kH3n);
  };
  const double h3n_ratio = seconds("200", Algorithm::kH3n) / seconds("100", Algorithm::kH3n);
  const double hpsg_ratio = seconds("100", Algorithm::kHpsg) / seconds("50", Algorithm::kHpsg);
  const double fast_long = speedup("120-134"), fast_short = speedup("20-34");
  Check check;
  check.expect(h3n_ratio >= 4 && h3n_ratio <= 16, "(a) h3n 200/100 ratio " + fmt("%.2f", h3n_ratio));
  check.expect(fast_long >= 5, "(b) speedup at ~127 " + fmt("%.2f", fast_long));
  check.expect(fast_long > fast_short, "(b) speedup not widening");
  check.expect(hpsg_ratio >= 16, "(c) hpsg 100/50 ratio " + fmt("%.2f", hpsg_ratio));
  const double minutes = minutes_since(start);
  check.expect(minutes < kBenchMinutes, "took " + fmt("%.1f", minutes) + " min");
  return check.done("(a) h3n t200/t100 = " + fmt("%.2f", h3n_ratio) + " in [4,16]; (b) speedup ~127 = " +
                    fmt("%.2fx", fast_long) + " >= 5 and > ~27 = " + fmt("%.2fx", fast_short) +
                    "; (c) hpsg t100/t50 = " + fmt("%.2f", hpsg_ratio) + " >= 16; " + fmt("%.1f", minutes) + " min");
}

// --- 6 ----------------------------------------------------------------------

bool surface_ordered(const TreeNode& node, int& next) {
  if (node.is_terminal()) return node.end == next++;
  const int first = next;
  for (const auto& c : node.children)
    if (!surface_ordered(c, next)) return false;
  return node.begin == first - 1 && node.end == next - 1;
}

Outcome conversion() {
  const std::vector<std::string> rels{"nsubj", "obj", "det", "amod", "advmod", "root"};
  Check check;
  for (int s = 0; s < 500; ++s) {
    const auto d = random_projective_dep_tree(1 + s % 20, rels, 700 + s);
    check.expect(heads_from_pseudo_tree(dep_to_const(d)).heads() == d.heads(), "(a) seed " + std::to_string(700 + s));
  }
  for (int s = 0; s < 200; ++s) {
    const int n = 3 + s % 18;
    const auto d = random_nonprojective_dep_tree(n, rels, 1700 + s);
    const auto t = dep_to_const(d);
    int next = 1;
    check.expect(surface_ordered(t.root(), next) && next == n + 1, "(b) seed " + std::to_string(1700 + s));
  }
  for (int s = 0; s < 500; ++s) {
    const auto gold = random_joint_tree(1 + s % 10, gold_const_labels(), rels, 2700 + s);
    check.expect(joint_from_parallel(expand_unary(debinarize(gold.tree())), gold.dependencies()) == gold,
                 "(c) seed " + std::to_string(2700 + s));
  }
  return check.done("(a) 500 projective trees reproduce their heads; (b) 200 non-projective trees ordered and "
                    "contiguous; (c) 500 joint trees n<=10 round-trip");
}

// --- 7 ----------------------------------------------------------------------

Outcome io_round_trips() {
  Check check;
  const std::vector<std::string> tags{"DT", "NN", "VBD", "IN", ",", "."};
  std::vector<PtbEntry> ptb;
  std::vector<ConllEntry> conll;
  for (int s = 0; s < 1000; ++s) {
    const int n = 1 + s % 30;
    const auto tree = random_const_tree(n, {"S", "NP", "VP", "PP", "SBAR", "-NONE-"}, tags, 300 + s);
    auto sentence = random_sentence(n, tags, 300 + s);
    sentence.pos_tags = preterminal_labels(tree);
    ptb.push_back({sentence, tree});
    const auto dep = n >= 3 && s % 2 ? random_nonprojective_dep_tree(n, {"a", "b", "punct"}, 300 + s)
                                     : random_projective_dep_tree(n, {"a", "b", "punct"}, 300 + s);
    conll.push_back({random_sentence(n, tags, 400 + s), dep});
  }
  const auto ptb_text = write_ptb(ptb);
  const auto ptb_back = read_ptb(ptb_text);
  bool ptb_same = ptb_back.size() == ptb.size();
  for (std::size_t s = 0; ptb_same && s < ptb.size(); ++s)
    ptb_same = ptb_back[s].tree == ptb[s].tree && ptb_back[s].sentence == ptb[s].sentence;
  check.expect(ptb_same && write_ptb(ptb_back) == ptb_text, "bracketed round-trip");

  const auto conll_text = write_conll(conll);
  const auto conll_back = read_conll(conll_text);
  bool conll_same = conll_back.size() == conll.size();
  for (std::size_t s = 0; conll_same && s < conll.size(); ++s)
    conll_same = conll_back[s].tree == conll[s].tree && conll_back[s].sentence == conll[s].sentence;
  check.expect(conll_same && write_conll(conll_back) == conll_text, "CoNLL round-trip");

  std::vector<NamedChart> charts;
  for (int s = 0; s < 200; ++s) charts.push_back({"c" + std::to_string(s), chart(1 + s % 12, 600 + s)});
  const auto back = read_charts(write_charts(charts));
  double worst = 0;
  for (std::size_t s = 0; s < charts.size(); ++s) {
    const auto& a = charts[s].chart;
    const auto& b = back[s].chart;
    const int n = a.length();
    check.expect(b.length() == n && b.labels_c() == a.labels_c() && b.labels_d() == a.labels_d(), "chart header");
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        if (i < j) {
          worst = std::max(worst, std::abs(a.span(i, j) - b.span(i, j)));
          for (int l = 0; l < a.num_labels_c(); ++l) worst = std::max(worst, std::abs(a.label(i, j, l) - b.label(i, j, l)));
        }
        if (j >= 1 && i != j) {
          worst = std::max(worst, std::abs(a.arc(i, j) - b.arc(i, j)));
          for (int l = 0; l < a.num_labels_d(); ++l)
            worst = std::max(worst, std::abs(a.dep_label(i, j, l) - b.dep_label(i, j, l)));
        }
      }
    for (int w = 1; w <= n; ++w) check.expect(a.head_level(w) == b.head_level(w), "head level");
  }
  check.expect(worst <= kChartFileTol, "chart error " + fmt("%.3g", worst));
  return check.done("1000 bracketed and 1000 CoNLL sentences identical after write/read; 200 charts max error " +
                    fmt("%.2g", worst));
}

// --- 8 ----------------------------------------------------------------------

Outcome metric_arithmetic() {
  Check check;
  auto pt = [](int w) { return make_preterminal("X", w); };
  ConstTree gold(make_node("S", {make_node("A", {pt(1), pt(2)}), make_node("B", {pt(3), make_node("C", {pt(4), pt(5)})})}));
  ConstTree pred(make_node("S", {make_node("A", {pt(1), pt(2)}), make_node("D", {pt(3), pt(4)}), pt(5)}));
  const auto b = evalb(pred, gold);
  const std::string bracket = fmt("%.2f", b.lp) + "/" + fmt("%.2f", b.lr) + "/" + fmt("%.2f", b.lf1);
  check.expect(bracket == "66.67/50.00/57.14", "evalb " + bracket);
  const auto same = evalb(gold, gold);
  check.expect(same.lp == 100 && same.lr == 100 && same.lf1 == 100, "evalb identity");

  DepTree dg({2, 0, 2, 3, 2}, {"a", "root", "b", "c", "punct"});
  DepTree dp({2, 0, 2, 2, 4}, {"a", "root", "x", "c", "punct"});
  const auto a = attachment_scores(dp, dg, {"NN", "VB", "NN", "NN", "."});
  const std::string attach = fmt("%.2f", a.uas) + "/" + fmt("%.2f", a.las);
  check.expect(attach == "75.00/50.00", "attachment " + attach);
  const auto ident = attachment_scores(dg, dg, {"NN", "VB", "NN", "NN", "NN"});
  check.expect(ident.uas == 100 && ident.las == 100, "attachment identity");
  return check.done("LP/LR/LF1 = " + bracket + " (3 pred, 4 gold, 2 matched); UAS/LAS = " + attach +
                    " (5 words, 1 punct)");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence}, {"gold recovery", gold_recovery},
      {"dominance and consistency", dominance},   {"head properties", head_properties},
      {"complexity scaling", complexity_scaling}, {"conversion", conversion},
      {"I/O round-trips", io_round_trips},        {"metric arithmetic", metric_arithmetic}};
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "criterion must be 1.." << criteria.size() << '\n';
    return 2;
  }
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    if (only && static_cast<int>(c) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c + 1 << " (" << criteria[c].first
              << "): " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
