#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hdp/bench.hpp"
#include "hdp/chart.hpp"
#include "hdp/convert.hpp"
#include "hdp/decoders.hpp"
#include "hdp/error.hpp"
#include "hdp/eval.hpp"
#include "hdp/head_scoring.hpp"
#include "hdp/io.hpp"
#include "hdp/synth.hpp"

namespace py = pybind11;
using namespace hdp;

namespace {

// Head levels cross the boundary as int or None.
std::vector<std::optional<int>> to_py(const std::vector<HeadLevel>& levels) {
  std::vector<std::optional<int>> out;
  for (auto l : levels) out.push_back(l.is_none() ? std::nullopt : std::optional<int>(l.value()));
  return out;
}

std::vector<HeadLevel> from_py(const std::vector<std::optional<int>>& levels) {
  std::vector<HeadLevel> out;
  for (auto l : levels) out.push_back(l ? HeadLevel(*l) : HeadLevel::none());
  return out;
}

Algorithm algo_from(const std::string& name) {
  auto a = parse_algorithm(name);
  if (!a) throw py::value_error("unknown algorithm '" + name + "'");
  return *a;
}

ConstTree single_ptb(const std::string& text) {
  auto entries = read_ptb(text);
  if (entries.size() != 1) throw py::value_error("expected exactly one tree");
  return entries.front().tree;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Joint constituency and dependency decoding";
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<ConversionError>(m, "ConversionError", PyExc_ValueError);
  m.attr("EMPTY_LABEL") = std::string(kEmptyLabel);
  m.attr("LEVEL_CAP") = kLevelCap;

  py::class_<ScoreChart>(m, "ScoreChart")
      .def(py::init<int, std::vector<std::string>, std::vector<std::string>>(), py::arg("n"), py::arg("labels_c"),
           py::arg("labels_d"))
      .def_property_readonly("length", &ScoreChart::length)
      .def_property_readonly("labels_c", &ScoreChart::labels_c)
      .def_property_readonly("labels_d", &ScoreChart::labels_d)
      .def("span", &ScoreChart::span)
      .def("label", &ScoreChart::label)
      .def("arc", &ScoreChart::arc)
      .def("dep_label", &ScoreChart::dep_label)
      .def("set_span", &ScoreChart::set_span)
      .def("set_label", &ScoreChart::set_label)
      .def("set_arc", &ScoreChart::set_arc)
      .def("set_dep_label", &ScoreChart::set_dep_label)
      .def("head_level",
           [](const ScoreChart& c, int w) { return to_py({c.head_level(w)}).front(); })
      .def("set_head_level",
           [](ScoreChart& c, int w, std::optional<int> level) { c.set_head_level(w, from_py({level}).front()); })
      .def("validate", &ScoreChart::validate);

  m.def("random_chart", &random_chart, py::arg("n"), py::arg("labels_c"), py::arg("labels_d"), py::arg("seed"));
  m.def("default_const_labels", &default_const_labels, py::arg("count") = 6);
  m.def("default_dep_labels", &default_dep_labels, py::arg("count") = 4);
  m.def("oracle_chart", &oracle_chart, py::arg("gold"), py::arg("margin") = 1.0,
        py::arg("labels_c") = std::vector<std::string>{}, py::arg("labels_d") = std::vector<std::string>{});
  m.def("read_charts", [](const std::string& text) {
    std::vector<std::pair<std::string, ScoreChart>> out;
    for (auto& c : read_charts(text)) out.emplace_back(c.id, std::move(c.chart));
    return out;
  });
  m.def("write_charts", [](const std::vector<std::pair<std::string, ScoreChart>>& charts) {
    std::vector<NamedChart> named;
    for (const auto& [id, c] : charts) named.push_back({id, c});
    return write_charts(named);
  });

  py::class_<ConstTree>(m, "ConstTree")
      .def_static("from_ptb", &single_ptb, "Parse one bracketed tree.")
      .def_property_readonly("length", &ConstTree::length)
      .def("ptb", [](const ConstTree& t) { return write_ptb_tree(t, Sentence::placeholder(t.length())); })
      .def("__str__", &ConstTree::str)
      .def("__eq__", [](const ConstTree& a, const ConstTree& b) { return a == b; });

  py::class_<DepTree>(m, "DepTree")
      .def(py::init<std::vector<int>, std::vector<std::string>>(), py::arg("heads"), py::arg("labels"))
      .def_property_readonly("heads", &DepTree::heads)
      .def_property_readonly("labels", &DepTree::labels)
      .def_property_readonly("root_word", &DepTree::root_word)
      .def("is_projective", &DepTree::is_projective)
      .def("__len__", &DepTree::size)
      .def("__eq__", [](const DepTree& a, const DepTree& b) { return a == b; });

  py::class_<JointTree>(m, "JointTree")
      .def_property_readonly("tree", &JointTree::tree)
      .def_property_readonly("length", &JointTree::length)
      .def_property_readonly("arc_labels", &JointTree::arc_labels)
      .def("dependencies", &JointTree::dependencies)
      .def("head_levels", [](const JointTree& t) { return to_py(gold_head_levels(t)); })
      .def("__eq__", [](const JointTree& a, const JointTree& b) { return a == b; });

  m.def("random_joint_tree",
        [](int n, const std::vector<std::string>& labels_c, const std::vector<std::string>& labels_d,
           std::uint64_t seed) { return random_joint_tree(n, labels_c, labels_d, seed); },
        py::arg("n"), py::arg("labels_c"), py::arg("labels_d"), py::arg("seed"));
  m.def("random_projective_dep_tree", &random_projective_dep_tree);
  m.def("random_nonprojective_dep_tree", &random_nonprojective_dep_tree);

  py::class_<DecodeResult>(m, "DecodeResult")
      .def_readonly("score", &DecodeResult::score)
      .def_readonly("dp_score", &DecodeResult::dp_score)
      .def_readonly("const_tree", &DecodeResult::const_tree)
      .def_readonly("dep_tree", &DecodeResult::dep_tree)
      .def_readonly("joint_tree", &DecodeResult::joint_tree);

  m.def("decode", [](const std::string& algo, const ScoreChart& c) { return decode(algo_from(algo), c); },
        py::arg("algo"), py::arg("chart"), py::call_guard<py::gil_scoped_release>());
  m.def("brute_force_joint", &brute_force_joint);

  m.def("head_scores", [](const std::vector<std::optional<int>>& levels) { return head_scores(from_py(levels)); });

  m.def("dep_to_const", &dep_to_const);
  m.def("heads_from_pseudo_tree", &heads_from_pseudo_tree);
  m.def("const_to_dep", [](const ConstTree& t, const std::string& rules) {
    return const_to_dep(t, HeadRuleTable::parse(rules));
  });
  m.def("joint_from_parallel", &joint_from_parallel);
  m.def("binarize", &binarize);
  m.def("debinarize", &debinarize);
  m.def("collapse_unary", &collapse_unary);
  m.def("expand_unary", &expand_unary);

  m.def("evalb", [](const ConstTree& p, const ConstTree& g) {
    auto s = evalb(p, g);
    return py::make_tuple(s.lp, s.lr, s.lf1);
  });
  m.def(
      "attachment_scores",
      [](const DepTree& p, const DepTree& g, const std::vector<std::string>& tags,
         std::optional<std::set<std::string>> punct) {
        auto s = attachment_scores(p, g, tags, punct ? *punct : default_punct_tags());
        return py::make_tuple(s.uas, s.las);
      },
      py::arg("pred"), py::arg("gold"), py::arg("pos_tags"), py::arg("punct") = std::nullopt);
  m.def("head_level_accuracy", [](const std::vector<std::optional<int>>& p, const std::vector<std::optional<int>>& g) {
    return head_level_accuracy(from_py(p), from_py(g));
  });

  m.def(
      "bench",
      [](const std::vector<std::string>& buckets, const std::vector<std::string>& algos, int sentences,
         std::uint64_t seed, int repeats, int threads, bool force) {
        BenchConfig config;
        config.buckets.clear();
        for (const auto& b : buckets) config.buckets.push_back(LengthBucket::parse(b));
        config.algos.clear();
        for (const auto& a : algos) config.algos.push_back(algo_from(a));
        config.sentences = sentences;
        config.seed = seed;
        config.repeats = repeats;
        config.threads = threads;
        config.force = force;
        BenchReport report;
        {
          py::gil_scoped_release release;
          report = run_bench(config);
        }
        return format_bench(report);
      },
      py::arg("buckets"), py::arg("algos") = std::vector<std::string>{"hpsg", "h3n"}, py::arg("sentences") = 50,
      py::arg("seed") = 1, py::arg("repeats") = 5, py::arg("threads") = 1, py::arg("force") = false);
}
