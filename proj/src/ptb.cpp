#include <cctype>
#include <optional>
#include <sstream>

#include "hdp/error.hpp"
#include "hdp/io.hpp"

namespace hdp {

namespace {

struct Token {
  enum Kind { kOpen, kClose, kAtom, kEnd } kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) return {Token::kEnd, {}, pos_};
    const std::size_t start = pos_;
    if (text_[pos_] == '(') return {Token::kOpen, text_.substr(pos_++, 1), start};
    if (text_[pos_] == ')') return {Token::kClose, text_.substr(pos_++, 1), start};
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return {Token::kAtom, text_.substr(start, pos_ - start), start};
  }

  Token peek() {
    const auto saved = pos_;
    auto tok = next();
    pos_ = saved;
    return tok;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail(const std::string& what, std::size_t offset) {
  throw FormatError(what + " at offset " + std::to_string(offset), offset);
}

// Raw s-expression before word numbering.
struct RawNode {
  std::string label;  // empty for unlabeled brackets
  std::string word;   // set for bare words
  std::size_t offset = 0;
  std::vector<RawNode> children;
};

RawNode parse_bracket(Lexer& lex, std::size_t open_offset) {
  RawNode node;
  node.offset = open_offset;
  if (lex.peek().kind == Token::kAtom) node.label = std::string(lex.next().text);
  for (;;) {
    auto tok = lex.next();
    switch (tok.kind) {
      case Token::kEnd:
        fail("unbalanced brackets", tok.offset);
      case Token::kClose:
        if (node.children.empty()) fail("constituent without children", open_offset);
        return node;
      case Token::kOpen:
        node.children.push_back(parse_bracket(lex, tok.offset));
        break;
      case Token::kAtom: {
        RawNode word;
        word.word = std::string(tok.text);
        word.offset = tok.offset;
        node.children.push_back(std::move(word));
        break;
      }
    }
  }
}

TreeNode build(const RawNode& raw, Sentence& sentence) {
  if (raw.label.empty()) fail("empty label", raw.offset);
  if (raw.children.size() == 1 && !raw.children[0].word.empty()) {
    sentence.tokens.push_back(raw.children[0].word);
    sentence.pos_tags.push_back(raw.label);
    return make_preterminal(raw.label, sentence.size());
  }
  std::vector<TreeNode> children;
  for (const auto& child : raw.children) {
    if (child.word.empty()) {
      children.push_back(build(child, sentence));
    } else {
      sentence.tokens.push_back(child.word);
      sentence.pos_tags.emplace_back("_");
      children.push_back(make_terminal(sentence.size()));
    }
  }
  return make_node(raw.label, std::move(children));
}

void check_token(const std::string& s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("empty ") + what);
  for (char c : s)
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string(what) + " '" + s + "' cannot be written in bracketed form");
}

void render(const TreeNode& node, const Sentence& sentence, std::string& out) {
  if (node.is_terminal()) {
    check_token(sentence.tokens.at(node.end - 1), "token");
    out += sentence.tokens[node.end - 1];
    return;
  }
  check_token(node.label, "label");
  out += '(';
  out += node.label;
  for (const auto& child : node.children) {
    out += ' ';
    render(child, sentence, out);
  }
  out += ')';
}

}  // namespace

std::vector<PtbEntry> read_ptb(std::string_view text) {
  std::vector<PtbEntry> out;
  Lexer lex(text);
  for (;;) {
    auto tok = lex.next();
    if (tok.kind == Token::kEnd) break;
    if (tok.kind == Token::kClose) fail("unbalanced brackets", tok.offset);
    if (tok.kind == Token::kAtom) fail("stray token '" + std::string(tok.text) + "'", tok.offset);
    RawNode raw = parse_bracket(lex, tok.offset);
    if (raw.label.empty() && raw.children.size() == 1 && raw.children[0].word.empty()) raw = RawNode(raw.children[0]);
    Sentence sentence;
    TreeNode root = build(raw, sentence);
    try {
      out.push_back({std::move(sentence), ConstTree(std::move(root))});
    } catch (const std::invalid_argument& e) {
      fail(e.what(), tok.offset);
    }
  }
  return out;
}

std::string write_ptb_tree(const ConstTree& tree, const Sentence& sentence) {
  if (sentence.size() != tree.length()) throw std::invalid_argument("sentence and tree differ in length");
  std::string out;
  render(tree.root(), sentence, out);
  return out;
}

std::string write_ptb(const std::vector<PtbEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += write_ptb_tree(e.tree, e.sentence);
    out += '\n';
  }
  return out;
}

}  // namespace hdp
