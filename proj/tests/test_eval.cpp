#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "hdp/eval.hpp"
#include "hdp/head_scoring.hpp"
#include "hdp/synth.hpp"

using namespace hdp;

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

TreeNode pt(int w) { return make_preterminal("X", w); }

}  // namespace

TEST_CASE("evalb on identical trees") {
  const auto t = random_const_tree(9, {"S", "NP", "VP"}, {"DT", "NN"}, 3);
  const auto s = evalb(t, t);
  CHECK(s.lp == 100.0);
  CHECK(s.lr == 100.0);
  CHECK(s.lf1 == 100.0);
}

TEST_CASE("evalb hand-computed example: 3 predicted, 4 gold, 2 matched") {
  // gold spans: S(0,5) A(0,2) B(2,5) C(3,5); predicted: S(0,5) A(0,2) D(2,4)
  ConstTree gold(make_node("S", {make_node("A", {pt(1), pt(2)}),
                                 make_node("B", {pt(3), make_node("C", {pt(4), pt(5)})})}));
  ConstTree pred(make_node("S", {make_node("A", {pt(1), pt(2)}), make_node("D", {pt(3), pt(4)}), pt(5)}));
  const auto c = bracket_counts(pred, gold);
  CHECK(c.predicted == 3);
  CHECK(c.gold == 4);
  CHECK(c.matched == 2);
  const auto s = evalb(pred, gold);
  CHECK(fixed2(s.lp) == "66.67");
  CHECK(fixed2(s.lr) == "50.00");
  CHECK(fixed2(s.lf1) == "57.14");
  const auto swapped = evalb(gold, pred);
  CHECK(swapped.lp == s.lr);
  CHECK(swapped.lr == s.lp);
  CHECK(swapped.lf1 == s.lf1);
}

TEST_CASE("evalb counts duplicate labeled spans as a multiset") {
  ConstTree unary(make_node("A", {make_node("A", {pt(1), pt(2)})}));
  ConstTree flat(make_node("A", {pt(1), pt(2)}));
  const auto c = bracket_counts(unary, flat);
  CHECK(c.predicted == 2);
  CHECK(c.gold == 1);
  CHECK(c.matched == 1);
}

TEST_CASE("evalb rejects a length mismatch") {
  ConstTree a(make_node("S", {pt(1), pt(2)}));
  ConstTree b(make_node("S", {pt(1), pt(2), pt(3)}));
  CHECK_THROWS(evalb(a, b));
}

TEST_CASE("corpus evalb aggregates counts before dividing") {
  ConstTree gold(make_node("S", {make_node("A", {pt(1), pt(2)}), pt(3)}));
  ConstTree wrong(make_node("S", {pt(1), make_node("B", {pt(2), pt(3)})}));
  const auto s = evalb_corpus({gold, wrong, wrong}, {gold, gold, gold});
  // matched 2 + 1 + 1 of 6 predicted and 6 gold
  CHECK(fixed2(s.lp) == "66.67");
  CHECK(fixed2(s.lr) == "66.67");
}

TEST_CASE("metrics stay in range with LF1 between LP and LR") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 10);
    const auto a = random_const_tree(n, {"S", "NP"}, {"T"}, seed);
    const auto b = random_const_tree(n, {"S", "NP"}, {"T"}, seed + 1000);
    const auto s = evalb(a, b);
    CHECK(s.lp >= 0);
    CHECK(s.lp <= 100);
    CHECK(s.lr >= 0);
    CHECK(s.lr <= 100);
    CHECK(s.lf1 >= std::min(s.lp, s.lr) - 1e-9);
    CHECK(s.lf1 <= std::max(s.lp, s.lr) + 1e-9);
  }
}

TEST_CASE("attachment scores on identical trees") {
  DepTree d({2, 0, 2}, {"a", "root", "b"});
  const auto s = attachment_scores(d, d, {"NN", "VB", "NN"});
  CHECK(s.uas == 100.0);
  CHECK(s.las == 100.0);
}

TEST_CASE("attachment scores hand-computed example with punctuation") {
  // word 5 is punctuation; of words 1-4, three heads and two labels are right
  DepTree gold({2, 0, 2, 3, 2}, {"a", "root", "b", "c", "punct"});
  DepTree pred({2, 0, 2, 2, 4}, {"a", "root", "x", "c", "punct"});
  const auto s = attachment_scores(pred, gold, {"NN", "VB", "NN", "NN", "."});
  CHECK(fixed2(s.uas) == "75.00");
  CHECK(fixed2(s.las) == "50.00");
  const auto all = attachment_scores(pred, gold, {"NN", "VB", "NN", "NN", "."}, {});
  CHECK(fixed2(all.uas) == "60.00");
  CHECK(all.las <= all.uas);
}

TEST_CASE("attachment scores reject a length mismatch") {
  CHECK_THROWS(attachment_scores(DepTree({0}, {"r"}), DepTree({2, 0}, {"a", "r"}), {"N", "V"}));
}

TEST_CASE("head level accuracy") {
  const std::vector<HeadLevel> a{HeadLevel(1), HeadLevel(2), HeadLevel::none()};
  CHECK(head_level_accuracy(a, a) == 100.0);
  CHECK(head_level_accuracy(std::vector<HeadLevel>(4, HeadLevel::none()), std::vector<HeadLevel>(4, HeadLevel(1))) ==
        0.0);
  CHECK_THROWS(head_level_accuracy(a, {HeadLevel(1)}));
  const auto t = random_joint_tree(8, {"S", "NP"}, {"a"}, 9);
  CHECK(head_level_accuracy(gold_head_levels(t), gold_head_levels(t)) == 100.0);
  CHECK(span_head_accuracy(t, t) == 100.0);
}
