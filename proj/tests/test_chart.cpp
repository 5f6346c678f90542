#include <cmath>

#include "doctest.h"
#include "hdp/chart.hpp"
#include "hdp/error.hpp"
#include "hdp/head_scoring.hpp"
#include "hdp/synth.hpp"

using namespace hdp;

namespace {

const std::string E(kEmptyLabel);

std::string error_of(const std::string& text) {
  try {
    read_charts(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

std::string header(int n) {
  std::string s = "#SENT a " + std::to_string(n) + "\nCLABELS " + E + " S NP\nDLABELS root dep\n";
  for (int w = 1; w <= n; ++w) s += "HEADLVL " + std::to_string(w) + " 1\n";
  return s;
}

bool charts_close(const ScoreChart& a, const ScoreChart& b, double tol) {
  if (a.length() != b.length() || a.labels_c() != b.labels_c() || a.labels_d() != b.labels_d()) return false;
  const int n = a.length();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i < j) {
        if (std::abs(a.span(i, j) - b.span(i, j)) > tol) return false;
        for (int l = 0; l < a.num_labels_c(); ++l)
          if (std::abs(a.label(i, j, l) - b.label(i, j, l)) > tol) return false;
      }
      if (j >= 1 && i != j) {
        if (std::abs(a.arc(i, j) - b.arc(i, j)) > tol) return false;
        for (int l = 0; l < a.num_labels_d(); ++l)
          if (std::abs(a.dep_label(i, j, l) - b.dep_label(i, j, l)) > tol) return false;
      }
    }
  for (int w = 1; w <= n; ++w)
    if (a.head_level(w) != b.head_level(w)) return false;
  return true;
}

}  // namespace

TEST_CASE("random charts are deterministic per seed") {
  const auto a = random_chart(5, default_const_labels(), default_dep_labels(), 7);
  const auto b = random_chart(5, default_const_labels(), default_dep_labels(), 7);
  const auto c = random_chart(5, default_const_labels(), default_dep_labels(), 8);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK_NOTHROW(a.validate());
}

TEST_CASE("random chart values stay in range") {
  const auto c = random_chart(6, default_const_labels(), default_dep_labels(), 3);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      CHECK(std::abs(c.span(i, j)) <= 1.0);
      for (int l = 0; l < c.num_labels_c(); ++l) CHECK(std::abs(c.label(i, j, l)) <= 1.0);
    }
  for (int w = 1; w <= 6; ++w) {
    CHECK(c.head_level(w).value() >= 1);
    CHECK(c.head_level(w).value() <= kLevelCap);
  }
}

TEST_CASE("chart construction rejects bad label sets") {
  CHECK_THROWS(ScoreChart(3, {}, {"x"}));
  CHECK_THROWS(ScoreChart(3, {"S", E}, {"x"}));
  CHECK_THROWS(ScoreChart(3, {E}, {"x"}));
  CHECK_THROWS(ScoreChart(3, {E, "S"}, {}));
  CHECK_THROWS(ScoreChart(0, {E, "S"}, {"x"}));
}

TEST_CASE("chart files round-trip within 1e-9") {
  std::vector<NamedChart> charts;
  for (int s = 0; s < 20; ++s)
    charts.push_back({"s" + std::to_string(s), random_chart(1 + s % 9, default_const_labels(), default_dep_labels(), s)});
  charts[3].chart.set_head_level(1, HeadLevel::none());
  charts[4].chart.set_span(0, 1, 12345.678901234);
  const auto text = write_charts(charts);
  const auto back = read_charts(text);
  REQUIRE(back.size() == charts.size());
  for (std::size_t s = 0; s < charts.size(); ++s) {
    CHECK(back[s].id == charts[s].id);
    CHECK(charts_close(back[s].chart, charts[s].chart, 1e-9 * 1e5));
    CHECK(charts_close(back[s].chart, charts[s].chart, s == 4 ? 1e-4 : 1e-9));
  }
  CHECK(write_charts(back) == text);
}

TEST_CASE("chart reader errors") {
  CHECK(error_of("") == "line 1: missing #SENT header");
  CHECK(error_of("SPAN 0 1 0.5\n") == "line 1: missing #SENT header");
  CHECK(error_of(header(3) + "ARC 2 2 0.5\n").find("self-arc forbidden") != std::string::npos);
  CHECK(error_of(header(3) + "ARC 2 2 0.5\n").rfind("line 7:", 0) == 0);
  CHECK(error_of(header(3) + "SPAN 0 4 1\n").find("out of range") != std::string::npos);
  CHECK(error_of(header(3) + "LABEL 0 1 3 1\n").find("label index out of range") != std::string::npos);
  CHECK(error_of(header(3) + "SPAN 0 1 1\nSPAN 0 1 2\n").find("duplicate entry") != std::string::npos);
  CHECK(error_of(header(3) + "SPAN 0 1 abc\n").find("expected number") != std::string::npos);
  CHECK(error_of(header(3) + "FOO 1\n").find("unknown record") != std::string::npos);
  CHECK(error_of(header(3) + "HEADLVL 1 33\n").find("duplicate entry") != std::string::npos);
  CHECK(error_of("#SENT a 2\nCLABELS " + E + " S\nDLABELS r\nHEADLVL 1 40\nHEADLVL 2 1\n").find("head level out of range") !=
        std::string::npos);
  CHECK(error_of("#SENT a 2\nCLABELS " + E + " S\nDLABELS r\nHEADLVL 1 1\n") ==
        "line 1: sentence 'a' missing HEADLVL for word 2");
  CHECK(error_of("#SENT a 1\nCLABELS S " + E + "\nDLABELS r\nHEADLVL 1 1\n").find("first constituent label") !=
        std::string::npos);
  CHECK(error_of("#SENT a 1\nDLABELS r\nHEADLVL 1 1\n").find("no CLABELS") != std::string::npos);
}

TEST_CASE("omitted entries default to zero") {
  const auto charts = read_charts(header(2) + "# comment\nSPAN 0 2 0.25\n");
  REQUIRE(charts.size() == 1);
  const auto& c = charts[0].chart;
  CHECK(c.span(0, 2) == 0.25);
  CHECK(c.span(0, 1) == 0.0);
  CHECK(c.arc(0, 1) == 0.0);
  CHECK(c.label(1, 2, 2) == 0.0);
}

TEST_CASE("oracle chart marks gold items") {
  const auto gold = random_joint_tree(6, {"S", "NP", "VP"}, {"a", "b"}, 11);
  const auto c = oracle_chart(gold, 1.0);
  CHECK(c.labels_c().front() == E);
  const auto dep = gold.dependencies();
  for (int m = 1; m <= 6; ++m) {
    CHECK(c.arc(dep.head(m), m) == 1.0);
    CHECK(c.dep_label(dep.head(m), m, c.label_d_index(dep.label(m))) == 1.0);
  }
  int marked = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int l = 0; l < c.num_labels_c(); ++l) marked += c.label(i, j, l) == 1.0;
  CHECK(marked == 11);  // 2n - 1 nodes in a binary tree
  const auto levels = gold_head_levels(gold);
  for (int w = 1; w <= 6; ++w) CHECK(c.head_level(w) == levels[w - 1]);
}
