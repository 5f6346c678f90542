#include "doctest.h"
#include "hdp/head_scoring.hpp"
#include "hdp/synth.hpp"

using namespace hdp;

namespace {

TreeNode leaf(const std::string& label, int w) {
  auto p = make_preterminal(label, w);
  p.head = w;
  return p;
}

TreeNode node(const std::string& label, TreeNode l, TreeNode r, bool head_left) {
  const int h = head_left ? l.head : r.head;
  auto n = make_node(label, {std::move(l), std::move(r)});
  n.head = h;
  return n;
}

// (S (N w1) (VP (V w2) (N w3))) headed by w2
JointTree small_tree() {
  return JointTree(ConstTree(node("S", leaf("N", 1), node("VP", leaf("V", 2), leaf("N", 3), true), false)),
                   {"nsubj", "root", "obj"});
}

int max_depth(const TreeNode& n) {
  if (n.is_preterminal()) return 1;
  return 1 + std::max(max_depth(n.children[0]), max_depth(n.children[1]));
}

}  // namespace

TEST_CASE("span levels") {
  JointTree single(ConstTree(leaf("N", 1)), {"root"});
  CHECK(span_levels(single) == SpanLevelMap{{{0, 1}, 1}});
  const auto levels = span_levels(small_tree());
  CHECK(levels.at({0, 3}) == 1);
  CHECK(levels.at({0, 1}) == 2);
  CHECK(levels.at({1, 3}) == 2);
  CHECK(levels.at({1, 2}) == 3);
  CHECK(levels.at({2, 3}) == 3);
}

TEST_CASE("max span level equals tree depth") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = random_joint_tree(1 + static_cast<int>(seed % 10), {"S", "NP"}, {"a"}, seed);
    int best = 0;
    for (const auto& [span, level] : span_levels(t)) best = std::max(best, level);
    CHECK(best == max_depth(t.tree().root()));
  }
}

TEST_CASE("gold head levels") {
  const auto levels = gold_head_levels(small_tree());
  CHECK(levels == std::vector<HeadLevel>{HeadLevel(2), HeadLevel(1), HeadLevel(3)});
  CHECK(head_score(levels[1]) == 1.0);
  // a level-4 word clamped to cap 2
  CHECK(gold_head_levels(small_tree(), 2)[2] == HeadLevel(2));
}

TEST_CASE("a word heading only a level-40 span is clamped to 32") {
  // left-branching chain: heads on the right child, so word 1 heads only its
  // pre-terminal at depth n
  const int n = 40;
  TreeNode t = leaf("A", 1);
  for (int w = 2; w <= n; ++w) t = node("S", std::move(t), leaf("A", w), false);
  JointTree j(ConstTree(t), std::vector<std::string>(n, "x"));
  CHECK(span_levels(j).at({0, 1}) == 40);
  CHECK(gold_head_levels(j)[0] == HeadLevel(32));
  CHECK(gold_head_levels(j)[n - 1] == HeadLevel(1));
}

TEST_CASE("head score mapping") {
  CHECK(head_score(HeadLevel(1)) == 1.0);
  CHECK(head_score(HeadLevel(4)) == 0.25);
  CHECK(head_score(HeadLevel::none()) == 0.0);
}

TEST_CASE("gold scores satisfy the head properties") {
  const auto t = small_tree();
  CHECK(check_head_properties(head_scores(gold_head_levels(t)), t).empty());
}

TEST_CASE("swapping root head and a non-head leaf violates property 1 at the root") {
  const auto t = small_tree();
  auto scores = head_scores(gold_head_levels(t));
  std::swap(scores[1], scores[2]);
  const auto v = check_head_properties(scores, t);
  bool root_violation = false;
  for (const auto& x : v) root_violation |= x.property == HeadProperty::kHeadDominatesSpan && x.span == Span{0, 3};
  CHECK(root_violation);
}

TEST_CASE("uniform scores violate property 1") {
  const auto t = small_tree();
  const auto v = check_head_properties({0.5, 0.5, 0.5}, t);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().property == HeadProperty::kHeadDominatesSpan);
}

TEST_CASE("property 2 holds for any per-word score table") {
  const auto t = random_joint_tree(8, {"S", "NP"}, {"a"}, 5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::vector<double> scores;
    for (int w = 0; w < 8; ++w) scores.push_back(static_cast<double>((seed * 31 + w * 17) % 7));
    for (const auto& v : check_head_properties(scores, t)) CHECK(v.property != HeadProperty::kSharedHeadConsistent);
  }
}
