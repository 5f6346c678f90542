#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hdp/trees.hpp"

namespace hdp {

struct HeadRule {
  bool right_to_left = false;
  std::vector<std::string> priority;  // child labels, most preferred first

  friend bool operator==(const HeadRule&, const HeadRule&) = default;
};

// Per-label head rules plus a default. Priority labels are tried in order;
// for each, children are scanned in the rule's direction. With no match the
// first child in that direction is the head.
class HeadRuleTable {
 public:
  HeadRuleTable() = default;
  HeadRuleTable(std::map<std::string, HeadRule> rules, HeadRule fallback)
      : rules_(std::move(rules)), default_(std::move(fallback)) {}

  // One rule per line: `<label> <l2r|r2l> <child-label>...`; a `DEFAULT
  // <l2r|r2l>` line is required. Blank lines and '#' comments are ignored.
  static HeadRuleTable parse(std::string_view text);
  std::string str() const;

  const HeadRule& rule(const std::string& label) const;
  // Index of the head child among `child_labels` (non-empty).
  int select(const std::string& label, const std::vector<std::string>& child_labels) const;

 private:
  std::map<std::string, HeadRule> rules_;
  HeadRule default_;
};

// Pseudo-constituent tree: every dependency subtree becomes a phrase labeled
// with its head word's relation. The head word stays a bare terminal unless
// the phrase would hold nothing else, in which case the phrase is a
// pre-terminal. Non-projective arcs are repaired by lifting children until
// every node is contiguous.
ConstTree dep_to_const(const DepTree& dep);

// Inverse reading of dep_to_const output: a phrase's head is its bare
// terminal child (or its word for a pre-terminal); phrase labels become arc
// labels. Throws ConversionError for a phrase with no bare terminal.
DepTree heads_from_pseudo_tree(const ConstTree& tree);

// Head-rule conversion. Arcs are labeled with the modifier child's label,
// "_" for bare terminals; the root arc is labeled "root".
DepTree const_to_dep(const ConstTree& tree, const HeadRuleTable& rules);

// Binarizes `tree` (collapsing unary chains first if present) and annotates
// each span with the word whose governor lies outside it. Throws
// ConversionError naming the span if the structures disagree.
JointTree joint_from_parallel(const ConstTree& tree, const DepTree& dep);

// Wraps every bare terminal in a pre-terminal labeled `label`, so decoder
// output can be paired with a dependency tree.
ConstTree tag_bare_terminals(const ConstTree& tree, const std::string& label = std::string(kEmptyLabel));

// True if every node covers a contiguous run of words and leaves are in
// surface order (always true for a valid ConstTree).
bool leaves_in_order(const ConstTree& tree);

}  // namespace hdp
