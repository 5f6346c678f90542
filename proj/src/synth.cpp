#include "hdp/synth.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hdp {

namespace {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

const std::string& pick(Rng& rng, const std::vector<std::string>& labels) {
  return labels[uniform_int(rng, 0, static_cast<int>(labels.size()) - 1)];
}

TreeNode maybe_wrap(Rng& rng, TreeNode node, const std::vector<std::string>& labels, double p) {
  while (std::bernoulli_distribution(p)(rng)) node = make_node(pick(rng, labels), {std::move(node)});
  return node;
}

TreeNode random_node(Rng& rng, int i, int j, const std::vector<std::string>& phrases,
                     const std::vector<std::string>& preterminals, const TreeShapeOptions& opt) {
  if (j - i == 1) return maybe_wrap(rng, make_preterminal(pick(rng, preterminals), j), phrases, opt.unary_probability);
  const int len = j - i;
  const int count = uniform_int(rng, 2, std::min(len, std::max(2, opt.max_children)));
  std::vector<int> cuts(len - 1);
  std::iota(cuts.begin(), cuts.end(), i + 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(count - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<TreeNode> children;
  int start = i;
  for (int cut : cuts) {
    children.push_back(random_node(rng, start, cut, phrases, preterminals, opt));
    start = cut;
  }
  children.push_back(random_node(rng, start, j, phrases, preterminals, opt));
  return maybe_wrap(rng, make_node(pick(rng, phrases), std::move(children)), phrases, opt.unary_probability);
}

void assign_heads(Rng& rng, TreeNode& node) {
  if (node.is_preterminal()) {
    node.head = node.end;
    return;
  }
  for (auto& child : node.children) assign_heads(rng, child);
  // the head child needs a non-empty label
  const bool left = node.children[1].is_empty_label() || std::bernoulli_distribution(0.5)(rng);
  node.head = node.children[left ? 0 : 1].head;
}

void attach(Rng& rng, int a, int b, int head, std::vector<int>& heads) {
  if (a > b) return;
  const int c = uniform_int(rng, a, b);
  heads[c - 1] = head;
  if (head > b) {
    attach(rng, a, c - 1, c, heads);
    const int s = uniform_int(rng, c, b);  // (c, s] under c, (s, b] under head
    attach(rng, c + 1, s, c, heads);
    attach(rng, s + 1, b, head, heads);
  } else {
    attach(rng, c + 1, b, c, heads);
    const int s = uniform_int(rng, a - 1, c - 1);  // [a, s] under head, (s, c) under c
    attach(rng, a, s, head, heads);
    attach(rng, s + 1, c - 1, c, heads);
  }
}

std::vector<std::string> random_labels(Rng& rng, int n, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(pick(rng, labels));
  return out;
}

void collect_preterminals(const TreeNode& node, std::vector<std::string>& out) {
  if (node.is_terminal()) {
    out.emplace_back("_");
    return;
  }
  if (node.is_preterminal()) {
    out.push_back(node.label);
    return;
  }
  for (const auto& child : node.children) collect_preterminals(child, out);
}

}  // namespace

ConstTree random_const_tree(int n, const std::vector<std::string>& phrase_labels,
                            const std::vector<std::string>& preterminal_labels, std::uint64_t seed,
                            const TreeShapeOptions& options) {
  if (n < 1) throw std::invalid_argument("tree length must be at least 1");
  if (phrase_labels.empty() || preterminal_labels.empty()) throw std::invalid_argument("empty label set");
  Rng rng(seed);
  return ConstTree(random_node(rng, 0, n, phrase_labels, preterminal_labels, options));
}

JointTree random_joint_tree(int n, const std::vector<std::string>& labels_c, const std::vector<std::string>& labels_d,
                            std::uint64_t seed, const TreeShapeOptions& options) {
  if (std::find(labels_c.begin(), labels_c.end(), kEmptyLabel) != labels_c.end())
    throw std::invalid_argument("gold labels cannot include the empty label");
  if (labels_d.empty()) throw std::invalid_argument("empty dependency label set");
  Rng rng(seed);
  ConstTree nary(random_node(rng, 0, n, labels_c, labels_c, options));
  TreeNode root = binarize(collapse_unary(nary)).root();
  assign_heads(rng, root);
  return JointTree(ConstTree(std::move(root)), random_labels(rng, n, labels_d));
}

DepTree random_projective_dep_tree(int n, const std::vector<std::string>& labels, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree length must be at least 1");
  Rng rng(seed);
  std::vector<int> heads(n, -1);
  const int root = uniform_int(rng, 1, n);
  heads[root - 1] = 0;
  attach(rng, 1, root - 1, root, heads);
  attach(rng, root + 1, n, root, heads);
  return DepTree(std::move(heads), random_labels(rng, n, labels));
}

DepTree random_nonprojective_dep_tree(int n, const std::vector<std::string>& labels, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("non-projective trees need at least 3 words");
  Rng rng(seed);
  for (;;) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> heads(n, 0);
    for (int idx = 1; idx < n; ++idx) heads[order[idx] - 1] = order[uniform_int(rng, 0, idx - 1)];
    DepTree tree(heads, random_labels(rng, n, labels));
    if (!tree.is_projective()) return tree;
  }
}

Sentence random_sentence(int n, const std::vector<std::string>& tags, std::uint64_t seed) {
  Rng rng(seed);
  Sentence s;
  for (int i = 0; i < n; ++i) {
    std::string token;
    const int len = uniform_int(rng, 1, 8);
    for (int c = 0; c < len; ++c) token += static_cast<char>('a' + uniform_int(rng, 0, 25));
    s.tokens.push_back(std::move(token));
    s.pos_tags.push_back(pick(rng, tags));
  }
  return s;
}

std::vector<std::string> preterminal_labels(const ConstTree& tree) {
  std::vector<std::string> out;
  collect_preterminals(tree.root(), out);
  return out;
}

}  // namespace hdp
