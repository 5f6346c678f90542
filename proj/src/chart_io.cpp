#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "hdp/chart.hpp"
#include "hdp/error.hpp"
#include "text_util.hpp"

namespace hdp {

namespace {

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what, line);
}

int parse_int(std::string_view tok, std::size_t line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected integer, got '" + std::string(tok) + "'");
  return v;
}

double parse_score(std::string_view tok, std::size_t line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected number, got '" + std::string(tok) + "'");
  if (!std::isfinite(v)) fail(line, "non-finite score");
  return v;
}

// Table entries are buffered until the label lines of the sentence are known.
struct Entry {
  std::size_t line;
  std::vector<std::string_view> fields;
};

struct PendingSentence {
  std::size_t header_line = 0;
  std::string id;
  int n = 0;
  std::optional<std::vector<std::string>> labels_c;
  std::optional<std::vector<std::string>> labels_d;
  std::vector<Entry> entries;
};

void expect_fields(const Entry& e, std::size_t count) {
  if (e.fields.size() != count)
    fail(e.line, std::string(e.fields[0]) + " expects " + std::to_string(count - 1) + " fields");
}

ScoreChart build(const PendingSentence& p) {
  if (!p.labels_c) fail(p.header_line, "sentence '" + p.id + "' has no CLABELS line");
  if (!p.labels_d) fail(p.header_line, "sentence '" + p.id + "' has no DLABELS line");
  ScoreChart chart(p.n, *p.labels_c, *p.labels_d);
  const int n = p.n;
  const int lc = chart.num_labels_c();
  const int ld = chart.num_labels_d();
  const std::size_t cells = static_cast<std::size_t>(n + 1) * (n + 1);
  std::vector<char> seen_span(cells), seen_arc(cells), seen_label(cells * lc), seen_dlabel(cells * ld);
  std::vector<char> seen_level(n + 1);
  auto once = [](std::vector<char>& seen, std::size_t key, std::size_t line) {
    if (seen[key]) fail(line, "duplicate entry");
    seen[key] = 1;
  };
  auto check_span = [&](int i, int j, std::size_t line) {
    if (i < 0 || j > n || i >= j) fail(line, "span index out of range");
  };
  auto check_arc = [&](int h, int m, std::size_t line) {
    if (h < 0 || h > n || m < 1 || m > n) fail(line, "arc index out of range");
    if (h == m) fail(line, "self-arc forbidden");
  };

  for (const auto& e : p.entries) {
    const auto& f = e.fields;
    const std::string_view kind = f[0];
    if (kind == "SPAN") {
      expect_fields(e, 4);
      const int i = parse_int(f[1], e.line), j = parse_int(f[2], e.line);
      check_span(i, j, e.line);
      once(seen_span, i * (n + 1) + j, e.line);
      chart.set_span(i, j, parse_score(f[3], e.line));
    } else if (kind == "LABEL") {
      expect_fields(e, 5);
      const int i = parse_int(f[1], e.line), j = parse_int(f[2], e.line), l = parse_int(f[3], e.line);
      check_span(i, j, e.line);
      if (l < 0 || l >= lc) fail(e.line, "label index out of range");
      once(seen_label, (static_cast<std::size_t>(i) * (n + 1) + j) * lc + l, e.line);
      chart.set_label(i, j, l, parse_score(f[4], e.line));
    } else if (kind == "ARC") {
      expect_fields(e, 4);
      const int h = parse_int(f[1], e.line), m = parse_int(f[2], e.line);
      check_arc(h, m, e.line);
      once(seen_arc, h * (n + 1) + m, e.line);
      chart.set_arc(h, m, parse_score(f[3], e.line));
    } else if (kind == "DLABEL") {
      expect_fields(e, 5);
      const int h = parse_int(f[1], e.line), m = parse_int(f[2], e.line), l = parse_int(f[3], e.line);
      check_arc(h, m, e.line);
      if (l < 0 || l >= ld) fail(e.line, "label index out of range");
      once(seen_dlabel, (static_cast<std::size_t>(h) * (n + 1) + m) * ld + l, e.line);
      chart.set_dep_label(h, m, l, parse_score(f[4], e.line));
    } else if (kind == "HEADLVL") {
      expect_fields(e, 3);
      const int w = parse_int(f[1], e.line);
      if (w < 1 || w > n) fail(e.line, "word index out of range");
      once(seen_level, w, e.line);
      if (f[2] == "NONE") {
        chart.set_head_level(w, HeadLevel::none());
      } else {
        const int level = parse_int(f[2], e.line);
        if (level < 1 || level > kLevelCap) fail(e.line, "head level out of range");
        chart.set_head_level(w, HeadLevel(level));
      }
    } else {
      fail(e.line, "unknown record '" + std::string(kind) + "'");
    }
  }
  for (int w = 1; w <= n; ++w)
    if (!seen_level[w]) fail(p.header_line, "sentence '" + p.id + "' missing HEADLVL for word " + std::to_string(w));
  return chart;
}

}  // namespace

std::vector<NamedChart> read_charts(std::string_view text) {
  std::vector<NamedChart> out;
  std::optional<PendingSentence> pending;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields[0] == "#SENT") {
      if (pending) out.push_back({pending->id, build(*pending)});
      if (fields.size() != 3) fail(line_no, "#SENT expects an id and a length");
      pending.emplace();
      pending->header_line = line_no;
      pending->id = std::string(fields[1]);
      pending->n = parse_int(fields[2], line_no);
      if (pending->n < 1) fail(line_no, "sentence length must be at least 1");
      continue;
    }
    if (fields[0].front() == '#') continue;
    if (!pending) fail(line_no, "missing #SENT header");
    if (fields[0] == "CLABELS" || fields[0] == "DLABELS") {
      auto& target = fields[0] == "CLABELS" ? pending->labels_c : pending->labels_d;
      if (target) fail(line_no, "duplicate " + std::string(fields[0]) + " line");
      if (fields.size() < 2) fail(line_no, "empty label list");
      target.emplace(fields.begin() + 1, fields.end());
      if (fields[0] == "CLABELS" && fields[1] != kEmptyLabel)
        fail(line_no, "first constituent label must be " + std::string(kEmptyLabel));
      if (fields[0] == "CLABELS" && fields.size() < 3) fail(line_no, "CLABELS needs a non-empty label");
      continue;
    }
    pending->entries.push_back({line_no, std::move(fields)});
  }
  if (!pending) fail(line_no == 0 ? 1 : line_no, "missing #SENT header");
  out.push_back({pending->id, build(*pending)});
  return out;
}

std::string write_charts(const std::vector<NamedChart>& charts) {
  std::ostringstream os;
  for (const auto& [id, chart] : charts) {
    const int n = chart.length();
    os << "#SENT " << id << ' ' << n << '\n';
    os << "CLABELS";
    for (const auto& l : chart.labels_c()) os << ' ' << l;
    os << "\nDLABELS";
    for (const auto& l : chart.labels_d()) os << ' ' << l;
    os << '\n';
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (chart.span(i, j) != 0.0) os << "SPAN " << i << ' ' << j << ' ' << format_score(chart.span(i, j)) << '\n';
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int l = 0; l < chart.num_labels_c(); ++l)
          if (chart.label(i, j, l) != 0.0)
            os << "LABEL " << i << ' ' << j << ' ' << l << ' ' << format_score(chart.label(i, j, l)) << '\n';
    for (int h = 0; h <= n; ++h)
      for (int m = 1; m <= n; ++m)
        if (h != m && chart.arc(h, m) != 0.0) os << "ARC " << h << ' ' << m << ' ' << format_score(chart.arc(h, m)) << '\n';
    for (int h = 0; h <= n; ++h)
      for (int m = 1; m <= n; ++m)
        for (int l = 0; h != m && l < chart.num_labels_d(); ++l)
          if (chart.dep_label(h, m, l) != 0.0)
            os << "DLABEL " << h << ' ' << m << ' ' << l << ' ' << format_score(chart.dep_label(h, m, l)) << '\n';
    for (int w = 1; w <= n; ++w) {
      const auto level = chart.head_level(w);
      os << "HEADLVL " << w << ' ';
      if (level.is_none())
        os << "NONE";
      else
        os << level.value();
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace hdp
