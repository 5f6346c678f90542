#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "hdp/error.hpp"
#include "hdp/io.hpp"
#include "text_util.hpp"

namespace hdp {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what, line);
}

struct Row {
  std::size_t line;
  int head;
  std::string form, tag, label;
};

ConllEntry finish(const std::vector<Row>& rows) {
  const int n = static_cast<int>(rows.size());
  ConllEntry e;
  std::vector<int> heads;
  std::vector<std::string> labels;
  for (const auto& r : rows) {
    if (r.head > n) fail(r.line, "HEAD " + std::to_string(r.head) + " out of range");
    e.sentence.tokens.push_back(r.form);
    e.sentence.pos_tags.push_back(r.tag);
    heads.push_back(r.head);
    labels.push_back(r.label);
  }
  try {
    e.tree = DepTree(std::move(heads), std::move(labels));
  } catch (const std::invalid_argument& err) {
    fail(rows.front().line, err.what());
  }
  return e;
}

}  // namespace

std::vector<ConllEntry> read_conll(std::string_view text) {
  std::vector<ConllEntry> out;
  std::vector<Row> rows;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (!rows.empty()) out.push_back(finish(rows));
    rows.clear();
  };
  for (auto line : split_lines(text)) {
    ++line_no;
    if (split_fields(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    auto cols = split_fields(line, "\t");
    if (cols.size() != 10) fail(line_no, "expected 10 tab-separated columns, got " + std::to_string(cols.size()));
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;
    int id = 0, head = 0;
    auto [p1, e1] = std::from_chars(cols[0].data(), cols[0].data() + cols[0].size(), id);
    if (e1 != std::errc() || p1 != cols[0].data() + cols[0].size()) fail(line_no, "non-integer ID");
    if (id <= static_cast<int>(rows.size())) fail(line_no, "duplicate ID " + std::to_string(id));
    if (id != static_cast<int>(rows.size()) + 1) fail(line_no, "expected ID " + std::to_string(rows.size() + 1));
    auto [p2, e2] = std::from_chars(cols[6].data(), cols[6].data() + cols[6].size(), head);
    if (e2 != std::errc() || p2 != cols[6].data() + cols[6].size()) fail(line_no, "non-integer HEAD");
    if (head < 0) fail(line_no, "HEAD " + std::to_string(head) + " out of range");
    rows.push_back({line_no, head, std::string(cols[1]), std::string(cols[4]), std::string(cols[7])});
  }
  flush();
  return out;
}

std::string write_conll(const std::vector<ConllEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) {
    if (e.sentence.size() != e.tree.size()) throw std::invalid_argument("sentence and tree differ in length");
    for (int m = 1; m <= e.tree.size(); ++m)
      os << m << '\t' << e.sentence.tokens[m - 1] << "\t_\t_\t" << e.sentence.pos_tags[m - 1] << "\t_\t"
         << e.tree.head(m) << '\t' << e.tree.label(m) << "\t_\t_\n";
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<HeadLevel>> read_levels(std::string_view text) {
  std::vector<std::vector<HeadLevel>> out;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    auto& levels = out.emplace_back();
    for (auto f : fields) {
      if (f == "NONE") {
        levels.push_back(HeadLevel::none());
        continue;
      }
      int v = 0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size() || v < 1 || v > kLevelCap)
        fail(line_no, "bad head level '" + std::string(f) + "'");
      levels.emplace_back(v);
    }
  }
  return out;
}

std::string write_levels(const std::vector<std::vector<HeadLevel>>& levels) {
  std::ostringstream os;
  for (const auto& sentence : levels) {
    for (std::size_t w = 0; w < sentence.size(); ++w) {
      if (w) os << ' ';
      if (sentence[w].is_none())
        os << "NONE";
      else
        os << sentence[w].value();
    }
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace hdp
