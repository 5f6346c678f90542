#include "hdp/trees.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hdp {

namespace {

void validate_node(const TreeNode& node) {
  if (node.is_terminal()) {
    if (!node.label.empty())
      throw std::invalid_argument("labeled node '" + node.label + "' has no children");
    if (node.width() != 1)
      throw std::invalid_argument("terminal must span exactly one word");
    if (node.head != 0 && node.head != node.end)
      throw std::invalid_argument("terminal head must be its own word");
    return;
  }
  if (node.label.empty()) throw std::invalid_argument("internal node without label");
  if (node.children.front().begin != node.begin || node.children.back().end != node.end)
    throw std::invalid_argument("children of '" + node.label + "' do not cover its span");
  for (std::size_t c = 0; c + 1 < node.children.size(); ++c)
    if (node.children[c].end != node.children[c + 1].begin)
      throw std::invalid_argument("children of '" + node.label + "' are not contiguous");
  for (const auto& child : node.children) validate_node(child);
}

TreeNode strip_heads(TreeNode node) {
  node.head = 0;
  for (auto& child : node.children) child = strip_heads(std::move(child));
  return node;
}

TreeNode binarize_node(const TreeNode& node) {
  TreeNode out;
  out.label = node.label;
  out.begin = node.begin;
  out.end = node.end;
  if (node.children.size() <= 2) {
    for (const auto& child : node.children) out.children.push_back(binarize_node(child));
    return out;
  }
  // (A c1 c2 ... ck) -> (A c1 (∅ c2 (∅ ... ck)))
  std::vector<TreeNode> rest(node.children.begin() + 1, node.children.end());
  TreeNode tail;
  tail.label = std::string(kEmptyLabel);
  tail.begin = rest.front().begin;
  tail.end = rest.back().end;
  tail.children = std::move(rest);
  out.children.push_back(binarize_node(node.children.front()));
  out.children.push_back(binarize_node(tail));
  return out;
}

void debinarize_children(const TreeNode& node, std::vector<TreeNode>& out);

TreeNode debinarize_node(const TreeNode& node) {
  TreeNode out;
  out.label = node.label;
  out.begin = node.begin;
  out.end = node.end;
  debinarize_children(node, out.children);
  return out;
}

void debinarize_children(const TreeNode& node, std::vector<TreeNode>& out) {
  for (const auto& child : node.children) {
    if (!child.is_terminal() && child.is_empty_label())
      debinarize_children(child, out);
    else if (child.is_terminal())
      out.push_back(make_terminal(child.end));
    else
      out.push_back(debinarize_node(child));
  }
}

TreeNode collapse_node(const TreeNode& node) {
  if (node.is_terminal()) return node;
  if (node.label.find(kUnarySeparator) != std::string::npos)
    throw std::invalid_argument("label '" + node.label + "' contains the reserved unary separator");
  TreeNode out = node;
  const TreeNode* cur = &node;
  while (cur->children.size() == 1 && !cur->children.front().is_terminal()) {
    cur = &cur->children.front();
    if (cur->label.find(kUnarySeparator) != std::string::npos)
      throw std::invalid_argument("label '" + cur->label + "' contains the reserved unary separator");
    out.label += kUnarySeparator;
    out.label += cur->label;
  }
  out.children.clear();
  for (const auto& child : cur->children) out.children.push_back(collapse_node(child));
  return out;
}

TreeNode expand_node(const TreeNode& node) {
  if (node.is_terminal()) return node;
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = node.label.find(kUnarySeparator, start);
    parts.push_back(node.label.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  TreeNode inner;
  inner.label = parts.back();
  inner.begin = node.begin;
  inner.end = node.end;
  inner.head = node.head;
  for (const auto& child : node.children) inner.children.push_back(expand_node(child));
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) {
    TreeNode outer;
    outer.label = *it;
    outer.begin = node.begin;
    outer.end = node.end;
    outer.head = node.head;
    outer.children.push_back(std::move(inner));
    inner = std::move(outer);
  }
  return inner;
}

bool node_has_unary(const TreeNode& node) {
  if (node.is_terminal()) return false;
  if (node.children.size() == 1 && !node.children.front().is_terminal()) return true;
  return std::any_of(node.children.begin(), node.children.end(), node_has_unary);
}

bool node_chart_form(const TreeNode& node) {
  if (node.is_preterminal()) return true;
  if (node.children.size() != 2) return false;
  for (const auto& child : node.children)
    if (child.is_terminal() || !node_chart_form(child)) return false;
  return true;
}

void render(const TreeNode& node, std::string& out) {
  if (node.is_terminal()) {
    out += 'w';
    out += std::to_string(node.end);
    return;
  }
  out += '(';
  out += node.label;
  for (const auto& child : node.children) {
    out += ' ';
    render(child, out);
  }
  out += ')';
}

void check_joint(const TreeNode& node) {
  if (node.head <= node.begin || node.head > node.end)
    throw std::invalid_argument("head word outside the span of '" + node.label + "'");
  if (node.is_preterminal()) {
    if (node.head != node.end) throw std::invalid_argument("pre-terminal head must be its word");
    return;
  }
  const auto& left = node.children[0];
  const auto& right = node.children[1];
  check_joint(left);
  check_joint(right);
  if (node.head != left.head && node.head != right.head)
    throw std::invalid_argument("head of '" + node.label + "' is not shared with a child");
}

void collect_arcs(const TreeNode& node, std::vector<int>& heads) {
  if (node.is_preterminal()) return;
  const auto& left = node.children[0];
  const auto& right = node.children[1];
  const auto& modifier = left.head == node.head ? right : left;
  heads[modifier.head - 1] = node.head;
  collect_arcs(left, heads);
  collect_arcs(right, heads);
}

}  // namespace

void Sentence::validate() const {
  if (tokens.empty()) throw std::invalid_argument("sentence must have at least one token");
  if (tokens.size() != pos_tags.size())
    throw std::invalid_argument("tokens and tags differ in length");
}

Sentence Sentence::placeholder(int n) {
  Sentence s;
  for (int k = 1; k <= n; ++k) {
    s.tokens.push_back("w" + std::to_string(k));
    s.pos_tags.emplace_back("_");
  }
  return s;
}

TreeNode make_terminal(int word) {
  TreeNode t;
  t.begin = word - 1;
  t.end = word;
  return t;
}

TreeNode make_preterminal(std::string label, int word) {
  TreeNode p;
  p.label = std::move(label);
  p.begin = word - 1;
  p.end = word;
  p.children.push_back(make_terminal(word));
  return p;
}

TreeNode make_node(std::string label, std::vector<TreeNode> children) {
  if (children.empty()) throw std::invalid_argument("make_node needs children");
  TreeNode n;
  n.label = std::move(label);
  n.begin = children.front().begin;
  n.end = children.back().end;
  n.children = std::move(children);
  return n;
}

ConstTree::ConstTree(TreeNode root) : root_(std::move(root)) {
  if (root_.begin != 0 || root_.end < 1) throw std::invalid_argument("root must span (0, n) with n >= 1");
  if (root_.is_terminal()) throw std::invalid_argument("root must be a labeled node");
  if (root_.is_empty_label()) throw std::invalid_argument("root cannot carry the empty label");
  validate_node(root_);
}

std::string ConstTree::str() const {
  std::string out;
  render(root_, out);
  return out;
}

DepTree::DepTree(std::vector<int> heads, std::vector<std::string> labels)
    : heads_(std::move(heads)), labels_(std::move(labels)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("dependency tree must have at least one word");
  if (labels_.size() != heads_.size()) throw std::invalid_argument("heads and labels differ in length");
  int roots = 0;
  for (int m = 1; m <= n; ++m) {
    const int h = heads_[m - 1];
    if (h < 0 || h > n) throw std::invalid_argument("head index out of range for word " + std::to_string(m));
    if (h == m) throw std::invalid_argument("word " + std::to_string(m) + " heads itself");
    if (h == 0) ++roots;
  }
  if (roots != 1) throw std::invalid_argument("dependency tree needs exactly one root word");
  // every chain must reach 0 within n steps
  for (int m = 1; m <= n; ++m) {
    int cur = m;
    for (int steps = 0; cur != 0; ++steps) {
      if (steps > n) throw std::invalid_argument("dependency tree contains a cycle");
      cur = heads_[cur - 1];
    }
  }
}

int DepTree::root_word() const {
  for (int m = 1; m <= size(); ++m)
    if (heads_[m - 1] == 0) return m;
  return 0;
}

bool DepTree::is_projective() const {
  const int n = size();
  for (int a = 1; a <= n; ++a) {
    const int lo1 = std::min(a, heads_[a - 1]);
    const int hi1 = std::max(a, heads_[a - 1]);
    for (int b = a + 1; b <= n; ++b) {
      const int lo2 = std::min(b, heads_[b - 1]);
      const int hi2 = std::max(b, heads_[b - 1]);
      if ((lo1 < lo2 && lo2 < hi1 && hi1 < hi2) || (lo2 < lo1 && lo1 < hi2 && hi2 < hi1)) return false;
    }
  }
  return true;
}

JointTree::JointTree(ConstTree tree, std::vector<std::string> arc_labels)
    : tree_(std::move(tree)), arc_labels_(std::move(arc_labels)) {
  if (!is_chart_form(tree_)) throw std::invalid_argument("joint tree must be binarized and unary-collapsed");
  if (static_cast<int>(arc_labels_.size()) != tree_.length())
    throw std::invalid_argument("joint tree needs one arc label per word");
  check_joint(tree_.root());
}

DepTree JointTree::dependencies() const {
  std::vector<int> heads(tree_.length(), 0);
  collect_arcs(tree_.root(), heads);
  heads[tree_.root().head - 1] = 0;
  return DepTree(std::move(heads), arc_labels_);
}

ConstTree binarize(const ConstTree& tree) { return ConstTree(binarize_node(strip_heads(tree.root()))); }

ConstTree debinarize(const ConstTree& tree) {
  if (tree.root().is_empty_label()) throw std::invalid_argument("empty label at the root");
  return ConstTree(debinarize_node(tree.root()));
}

bool has_unary_chain(const ConstTree& tree) { return node_has_unary(tree.root()); }

ConstTree collapse_unary(const ConstTree& tree) { return ConstTree(collapse_node(tree.root())); }

ConstTree expand_unary(const ConstTree& tree) { return ConstTree(expand_node(tree.root())); }

bool is_chart_form(const ConstTree& tree) { return node_chart_form(tree.root()); }

}  // namespace hdp
