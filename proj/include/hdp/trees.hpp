#pragma once

// Tree data model shared by the decoders, converters and evaluators.
//
// Index convention: spans are half-open fencepost pairs (i, j) with
// 0 <= i < j <= n, so span (i, j) covers words i+1..j. Words are numbered
// 1..n; 0 is the pseudo-root of a dependency tree.

#include <string>
#include <string_view>
#include <vector>

namespace hdp {

// Label of nodes introduced by binarization.
inline constexpr std::string_view kEmptyLabel = "\xE2\x88\x85";  // U+2205
// Joins the labels of a collapsed unary chain.
inline constexpr char kUnarySeparator = '+';

struct Sentence {
  std::vector<std::string> tokens;
  std::vector<std::string> pos_tags;

  int size() const { return static_cast<int>(tokens.size()); }
  void validate() const;

  // Placeholder tokens w1..wn with tag "_".
  static Sentence placeholder(int n);

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// A node of a constituent tree. Terminals have an empty label, no children
// and span (k-1, k) for word k. `head` is the head word of the node in a
// joint tree (0 when the tree carries no head annotation).
struct TreeNode {
  std::string label;
  int begin = 0;
  int end = 0;
  int head = 0;
  std::vector<TreeNode> children;

  bool is_terminal() const { return children.empty(); }
  bool is_preterminal() const {
    return children.size() == 1 && children.front().is_terminal();
  }
  bool is_empty_label() const { return label == kEmptyLabel; }
  int width() const { return end - begin; }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

TreeNode make_terminal(int word);
TreeNode make_preterminal(std::string label, int word);
// Span is taken from the first and last child.
TreeNode make_node(std::string label, std::vector<TreeNode> children);

// Rooted ordered tree of labeled spans. Immutable; the constructor checks
// that children partition their parent contiguously, that terminals sit at
// the leaves, and that the root is a labeled non-empty-label node over (0, n).
class ConstTree {
 public:
  explicit ConstTree(TreeNode root);

  const TreeNode& root() const { return root_; }
  int length() const { return root_.end; }

  // Bracketed rendering with terminals printed as w1..wn (debug/tests).
  std::string str() const;

  friend bool operator==(const ConstTree&, const ConstTree&) = default;

 private:
  TreeNode root_;
};

class DepTree {
 public:
  DepTree() = default;
  // heads[m-1] is the governor of word m (0 for the root word).
  DepTree(std::vector<int> heads, std::vector<std::string> labels);

  int size() const { return static_cast<int>(heads_.size()); }
  int head(int word) const { return heads_[word - 1]; }
  const std::string& label(int word) const { return labels_[word - 1]; }
  const std::vector<int>& heads() const { return heads_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int root_word() const;
  bool is_projective() const;

  friend bool operator==(const DepTree&, const DepTree&) = default;

 private:
  std::vector<int> heads_;
  std::vector<std::string> labels_;
};

// Binarized, unary-collapsed constituent tree whose nodes carry head words
// satisfying the head feature principle, plus the relation label of every
// arc it induces (indexed by modifier word).
class JointTree {
 public:
  JointTree(ConstTree tree, std::vector<std::string> arc_labels);

  const ConstTree& tree() const { return tree_; }
  int length() const { return tree_.length(); }
  const std::vector<std::string>& arc_labels() const { return arc_labels_; }

  // Arcs from each binary node's head child head to the other child's head,
  // plus the root arc.
  DepTree dependencies() const;

  friend bool operator==(const JointTree&, const JointTree&) = default;

 private:
  ConstTree tree_;
  std::vector<std::string> arc_labels_;
};

// Right-branching binarization; introduced nodes are labeled with
// kEmptyLabel.
ConstTree binarize(const ConstTree& tree);
// Splices every empty-label node into its parent.
ConstTree debinarize(const ConstTree& tree);

bool has_unary_chain(const ConstTree& tree);
// Merges chains of single-child labeled nodes into one node labeled
// "A+B+...". Throws std::invalid_argument if an input label already
// contains the separator.
ConstTree collapse_unary(const ConstTree& tree);
ConstTree expand_unary(const ConstTree& tree);

// True if every labeled node has either two labeled children or a single
// terminal child.
bool is_chart_form(const ConstTree& tree);

// Calls fn(node, depth) in pre-order; depth of the root is 1.
template <typename Fn>
void visit_nodes(const TreeNode& node, Fn&& fn, int depth = 1) {
  fn(node, depth);
  for (const auto& child : node.children) visit_nodes(child, fn, depth + 1);
}

}  // namespace hdp
