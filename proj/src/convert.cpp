#include "hdp/convert.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "hdp/error.hpp"
#include "text_util.hpp"

namespace hdp {

namespace {

[[noreturn]] void rule_error(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what, line);
}

std::string span_name(int i, int j) { return "span (" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

// Mutable tree used while synthesizing pseudo-constituents. Leaves are the
// head words themselves.
struct PseudoNode {
  std::string label;
  int word = 0;  // leaf word, 0 for phrases
  int head = 0;
  int parent = -1;
  std::vector<int> children;
  int lo = 0, hi = 0;  // covered words once contiguous
};

struct PseudoTree {
  std::vector<PseudoNode> nodes;
  std::vector<int> post_order;  // phrases only

  int add(PseudoNode node) {
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
  }

  int build(int h, const std::vector<std::vector<int>>& dependents, const DepTree& dep) {
    const int phrase = add({dep.label(h), 0, h, -1, {}, 0, 0});
    auto leaf = [&] {
      const int id = add({"", h, h, phrase, {}, h, h});
      nodes[phrase].children.push_back(id);
    };
    bool placed = false;
    for (int d : dependents[h]) {
      if (d > h && !placed) {
        leaf();
        placed = true;
      }
      const int child = build(d, dependents, dep);
      nodes[child].parent = phrase;
      nodes[phrase].children.push_back(child);
    }
    if (!placed) leaf();
    post_order.push_back(phrase);
    return phrase;
  }

  // Keeps the children forming one contiguous block with the head leaf and
  // lifts the rest to the parent, which is repaired later in post-order.
  void repair(int id) {
    auto& node = nodes[id];
    std::sort(node.children.begin(), node.children.end(), [&](int a, int b) { return nodes[a].lo < nodes[b].lo; });
    std::size_t head_pos = 0;
    while (nodes[node.children[head_pos]].word != node.head) ++head_pos;
    std::size_t first = head_pos, last = head_pos;
    while (first > 0 && nodes[node.children[first - 1]].hi + 1 == nodes[node.children[first]].lo) --first;
    while (last + 1 < node.children.size() && nodes[node.children[last]].hi + 1 == nodes[node.children[last + 1]].lo)
      ++last;
    std::vector<int> kept(node.children.begin() + first, node.children.begin() + last + 1);
    for (std::size_t c = 0; c < node.children.size(); ++c) {
      if (c >= first && c <= last) continue;
      const int moved = node.children[c];
      // the root always covers every word, so it never lifts anything
      nodes[moved].parent = node.parent;
      nodes[node.parent].children.push_back(moved);
    }
    node.children = std::move(kept);
    node.lo = nodes[node.children.front()].lo;
    node.hi = nodes[node.children.back()].hi;
  }

  TreeNode emit(int id) const {
    const auto& node = nodes[id];
    if (node.word != 0) return make_terminal(node.word);
    if (node.children.size() == 1) return make_preterminal(node.label, node.head);
    std::vector<TreeNode> children;
    for (int c : node.children) children.push_back(emit(c));
    return make_node(node.label, std::move(children));
  }
};

int pseudo_heads(const TreeNode& node, std::vector<int>& heads, std::vector<std::string>& labels) {
  if (node.is_preterminal()) return node.end;
  int head = 0;
  for (const auto& child : node.children) {
    if (!child.is_terminal()) continue;
    if (head != 0) throw ConversionError(span_name(node.begin, node.end) + " has more than one bare head word");
    head = child.end;
  }
  if (head == 0) throw ConversionError(span_name(node.begin, node.end) + " has no bare head word");
  for (const auto& child : node.children) {
    if (child.is_terminal()) continue;
    const int m = pseudo_heads(child, heads, labels);
    heads[m - 1] = head;
    labels[m - 1] = child.label;
  }
  return head;
}

const std::string& child_label(const TreeNode& child) {
  static const std::string bare = "_";
  return child.is_terminal() ? bare : child.label;
}

int rule_heads(const TreeNode& node, const HeadRuleTable& rules, std::vector<int>& heads,
               std::vector<std::string>& labels) {
  if (node.is_terminal() || node.is_preterminal()) return node.end;
  if (node.is_empty_label())
    throw ConversionError("head rules expect a tree without empty labels at " + span_name(node.begin, node.end));
  std::vector<std::string> child_labels;
  std::vector<int> child_heads;
  for (const auto& child : node.children) {
    child_labels.push_back(child_label(child));
    child_heads.push_back(rule_heads(child, rules, heads, labels));
  }
  const int pick = rules.select(node.label, child_labels);
  const int head = child_heads[pick];
  for (std::size_t c = 0; c < node.children.size(); ++c) {
    if (static_cast<int>(c) == pick) continue;
    heads[child_heads[c] - 1] = head;
    labels[child_heads[c] - 1] = child_labels[c];
  }
  return head;
}

int outward_word(const DepTree& dep, int i, int j) {
  int found = 0, count = 0;
  for (int m = i + 1; m <= j; ++m) {
    const int h = dep.head(m);
    if (h <= i || h > j) {
      found = m;
      ++count;
    }
  }
  if (count != 1)
    throw ConversionError(span_name(i, j) + " has " + std::to_string(count) +
                          " words headed outside it; constituent and dependency trees disagree");
  return found;
}

void annotate(TreeNode& node, const DepTree& dep) {
  node.head = outward_word(dep, node.begin, node.end);
  if (node.is_preterminal()) return;
  for (auto& child : node.children) annotate(child, dep);
  const auto& modifier = node.children[0].head == node.head ? node.children[1] : node.children[0];
  if (dep.head(modifier.head) != node.head)
    throw ConversionError(span_name(node.begin, node.end) + ": word " + std::to_string(modifier.head) +
                          " should depend on " + std::to_string(node.head));
}

bool contiguous_node(const TreeNode& node, int& next) {
  if (node.is_terminal()) {
    if (node.end != next) return false;
    ++next;
    return true;
  }
  const int start = next;
  for (const auto& child : node.children)
    if (!contiguous_node(child, next)) return false;
  return node.begin + 1 == start && node.end + 1 == next;
}

TreeNode tag_node(const TreeNode& node, const std::string& label) {
  if (node.is_terminal()) return make_preterminal(label, node.end);
  if (node.is_preterminal()) return node;
  TreeNode out = node;
  for (auto& child : out.children) child = tag_node(child, label);
  return out;
}

}  // namespace

HeadRuleTable HeadRuleTable::parse(std::string_view text) {
  std::map<std::string, HeadRule> rules;
  std::optional<HeadRule> fallback;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() < 2) rule_error(line_no, "rule needs a label and a direction");
    HeadRule rule;
    if (fields[1] == "r2l")
      rule.right_to_left = true;
    else if (fields[1] != "l2r")
      rule_error(line_no, "direction must be l2r or r2l, got '" + std::string(fields[1]) + "'");
    rule.priority.assign(fields.begin() + 2, fields.end());
    if (fields[0] == "DEFAULT") {
      if (fallback) rule_error(line_no, "duplicate DEFAULT rule");
      fallback = std::move(rule);
    } else if (!rules.emplace(std::string(fields[0]), std::move(rule)).second) {
      rule_error(line_no, "duplicate rule for '" + std::string(fields[0]) + "'");
    }
  }
  if (!fallback) rule_error(line_no == 0 ? 1 : line_no, "missing DEFAULT rule");
  return HeadRuleTable(std::move(rules), std::move(*fallback));
}

std::string HeadRuleTable::str() const {
  std::ostringstream os;
  auto write = [&](const std::string& label, const HeadRule& rule) {
    os << label << ' ' << (rule.right_to_left ? "r2l" : "l2r");
    for (const auto& p : rule.priority) os << ' ' << p;
    os << '\n';
  };
  write("DEFAULT", default_);
  for (const auto& [label, rule] : rules_) write(label, rule);
  return os.str();
}

const HeadRule& HeadRuleTable::rule(const std::string& label) const {
  auto it = rules_.find(label);
  return it == rules_.end() ? default_ : it->second;
}

int HeadRuleTable::select(const std::string& label, const std::vector<std::string>& child_labels) const {
  const auto& r = rule(label);
  const int k = static_cast<int>(child_labels.size());
  auto at = [&](int step) { return r.right_to_left ? k - 1 - step : step; };
  for (const auto& wanted : r.priority)
    for (int step = 0; step < k; ++step)
      if (child_labels[at(step)] == wanted) return at(step);
  return at(0);
}

ConstTree dep_to_const(const DepTree& dep) {
  const int n = dep.size();
  std::vector<std::vector<int>> dependents(n + 1);
  for (int m = 1; m <= n; ++m) dependents[dep.head(m)].push_back(m);
  PseudoTree tree;
  const int root = tree.build(dep.root_word(), dependents, dep);
  for (int id : tree.post_order) tree.repair(id);
  return ConstTree(tree.emit(root));
}

DepTree heads_from_pseudo_tree(const ConstTree& tree) {
  const int n = tree.length();
  std::vector<int> heads(n, 0);
  std::vector<std::string> labels(n);
  const int root = pseudo_heads(tree.root(), heads, labels);
  heads[root - 1] = 0;
  labels[root - 1] = tree.root().label;
  return DepTree(std::move(heads), std::move(labels));
}

DepTree const_to_dep(const ConstTree& tree, const HeadRuleTable& rules) {
  const int n = tree.length();
  std::vector<int> heads(n, 0);
  std::vector<std::string> labels(n);
  const int root = rule_heads(tree.root(), rules, heads, labels);
  heads[root - 1] = 0;
  labels[root - 1] = "root";
  return DepTree(std::move(heads), std::move(labels));
}

JointTree joint_from_parallel(const ConstTree& tree, const DepTree& dep) {
  if (tree.length() != dep.size())
    throw ConversionError("constituent tree has " + std::to_string(tree.length()) + " words, dependency tree " +
                          std::to_string(dep.size()));
  if (!dep.is_projective()) throw ConversionError("dependency tree is not projective");
  ConstTree binary = binarize(has_unary_chain(tree) ? collapse_unary(tree) : tree);
  if (!is_chart_form(binary)) throw ConversionError("every word needs a pre-terminal");
  TreeNode root = binary.root();
  annotate(root, dep);
  return JointTree(ConstTree(std::move(root)), dep.labels());
}

ConstTree tag_bare_terminals(const ConstTree& tree, const std::string& label) {
  return ConstTree(tag_node(tree.root(), label));
}

bool leaves_in_order(const ConstTree& tree) {
  int next = 1;
  return contiguous_node(tree.root(), next) && next == tree.length() + 1;
}

}  // namespace hdp
