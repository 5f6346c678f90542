// Command-line front end: decode, bench, convert, eval, synth.

#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hdp/bench.hpp"
#include "hdp/chart.hpp"
#include "hdp/convert.hpp"
#include "hdp/decoders.hpp"
#include "hdp/error.hpp"
#include "hdp/eval.hpp"
#include "hdp/head_scoring.hpp"
#include "hdp/io.hpp"
#include "hdp/synth.hpp"

namespace {

using namespace hdp;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Reads a file and prefixes parse errors with its name.
template <typename Fn>
auto parse_file(const std::string& path, Fn&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const FormatError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// "``,'',:,\,,." -> {``, '', :, ",", .}; a backslash escapes the next character.
std::set<std::string> parse_punct(const std::string& spec) {
  std::set<std::string> tags;
  std::string cur;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i] == '\\' && i + 1 < spec.size()) {
      cur += spec[++i];
    } else if (spec[i] == ',') {
      if (!cur.empty()) tags.insert(cur);
      cur.clear();
    } else {
      cur += spec[i];
    }
  }
  if (!cur.empty()) tags.insert(cur);
  return tags;
}

// --- decode ---------------------------------------------------------------

struct DecodeArgs {
  std::string algo = "h3n";
  std::string charts;
  std::string const_out, dep_out, levels_out, sentences;
};

int cmd_decode(const DecodeArgs& a) {
  const auto algo = parse_algorithm(a.algo);
  if (!algo) throw UsageError("unknown algorithm '" + a.algo + "'");
  const std::string name(algorithm_name(*algo));
  if (!a.dep_out.empty() && !produces_dependencies(*algo))
    throw UsageError(name + " produces no dependency output");
  if (!a.const_out.empty() && !produces_constituents(*algo))
    throw UsageError(name + " produces no constituent output");
  if (!a.levels_out.empty() && !(produces_constituents(*algo) && produces_dependencies(*algo)))
    throw UsageError(name + " produces no head levels");
  const auto charts = parse_file(a.charts, read_charts);
  std::vector<Sentence> sentences;
  if (!a.sentences.empty()) {
    for (auto& e : parse_file(a.sentences, read_conll)) sentences.push_back(std::move(e.sentence));
    if (sentences.size() != charts.size()) throw std::runtime_error("sentence file and chart file differ in length");
  }
  std::vector<PtbEntry> const_out;
  std::vector<ConllEntry> dep_out;
  std::vector<std::vector<HeadLevel>> levels_out;
  for (std::size_t s = 0; s < charts.size(); ++s) {
    const auto& [id, chart] = charts[s];
    const Sentence sentence = sentences.empty() ? Sentence::placeholder(chart.length()) : sentences[s];
    if (sentence.size() != chart.length())
      throw std::runtime_error("sentence " + id + ": chart length differs from the sentence file");
    const auto result = decode(*algo, chart);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", result.score);
    std::cout << id << '\t' << buf << '\n';
    if (result.const_tree) const_out.push_back({sentence, *result.const_tree});
    if (result.dep_tree) dep_out.push_back({sentence, *result.dep_tree});
    if (result.joint_tree) levels_out.push_back(gold_head_levels(*result.joint_tree));
  }
  if (!a.const_out.empty()) write_file(a.const_out, write_ptb(const_out));
  if (!a.dep_out.empty()) write_file(a.dep_out, write_conll(dep_out));
  if (!a.levels_out.empty()) write_file(a.levels_out, write_levels(levels_out));
  return 0;
}

// --- bench ----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> buckets{"20-30", "120-130"};
  std::vector<std::string> algos{"hpsg", "h3n"};
  int sentences = 50;
  std::uint64_t seed = 1;
  int repeats = 5;
  int threads = 1;
  bool force = false;
};

int cmd_bench(const BenchArgs& a) {
  BenchConfig config;
  for (const auto& b : a.buckets) config.buckets.push_back(LengthBucket::parse(b));
  config.algos.clear();
  for (const auto& name : a.algos) {
    const auto algo = parse_algorithm(name);
    if (!algo) throw UsageError("unknown algorithm '" + name + "'");
    config.algos.push_back(*algo);
  }
  config.sentences = a.sentences;
  config.seed = a.seed;
  config.repeats = a.repeats;
  config.threads = a.threads;
  config.force = a.force;
  std::cout << format_bench(run_bench(config));
  return 0;
}

// --- convert --------------------------------------------------------------

struct ConvertArgs {
  std::string direction, in, out, rules;
};

int cmd_convert(const ConvertArgs& a) {
  if (a.direction == "d2c") {
    std::vector<PtbEntry> out;
    for (const auto& e : parse_file(a.in, read_conll)) out.push_back({e.sentence, dep_to_const(e.tree)});
    write_file(a.out, write_ptb(out));
  } else if (a.direction == "c2d") {
    if (a.rules.empty()) throw UsageError("c2d requires --rules");
    const auto rules = parse_file(a.rules, HeadRuleTable::parse);
    std::vector<ConllEntry> out;
    for (const auto& e : parse_file(a.in, read_ptb)) out.push_back({e.sentence, const_to_dep(e.tree, rules)});
    write_file(a.out, write_conll(out));
  } else {
    throw UsageError("direction must be d2c or c2d");
  }
  return 0;
}

// --- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string kind;
  std::vector<std::string> files;
  std::string punct;
};

void check_count(std::size_t pred, std::size_t gold) {
  if (pred != gold)
    throw std::runtime_error("prediction has " + std::to_string(pred) + " sentences, gold " + std::to_string(gold));
}

int cmd_eval(const EvalArgs& a) {
  const auto punct = a.punct.empty() ? default_punct_tags() : parse_punct(a.punct);
  const std::size_t want = a.kind == "joint" ? 4 : 2;
  if (a.files.size() != want) throw UsageError("eval " + a.kind + " expects " + std::to_string(want) + " files");
  if (a.kind == "const") {
    const auto pred = parse_file(a.files[0], read_ptb);
    const auto gold = parse_file(a.files[1], read_ptb);
    check_count(pred.size(), gold.size());
    BracketCounts c;
    for (std::size_t s = 0; s < gold.size(); ++s) c += bracket_counts(pred[s].tree, gold[s].tree);
    std::cout << "sentences " << gold.size() << "\nLP " << fixed2(c.precision()) << "\nLR " << fixed2(c.recall())
              << "\nLF1 " << fixed2(c.f1()) << '\n';
  } else if (a.kind == "dep") {
    const auto pred = parse_file(a.files[0], read_conll);
    const auto gold = parse_file(a.files[1], read_conll);
    check_count(pred.size(), gold.size());
    AttachmentCounts c;
    for (std::size_t s = 0; s < gold.size(); ++s)
      c += attachment_counts(pred[s].tree, gold[s].tree, gold[s].sentence.pos_tags, punct);
    std::cout << "sentences " << gold.size() << "\ntokens " << c.total << "\nUAS " << fixed2(c.uas()) << "\nLAS "
              << fixed2(c.las()) << '\n';
  } else if (a.kind == "headlvl") {
    const auto pred = parse_file(a.files[0], read_levels);
    const auto gold = parse_file(a.files[1], read_levels);
    check_count(pred.size(), gold.size());
    std::vector<HeadLevel> p, g;
    for (std::size_t s = 0; s < gold.size(); ++s) {
      if (pred[s].size() != gold[s].size())
        throw std::runtime_error("sentence " + std::to_string(s + 1) + " differs in length");
      p.insert(p.end(), pred[s].begin(), pred[s].end());
      g.insert(g.end(), gold[s].begin(), gold[s].end());
    }
    std::cout << "sentences " << gold.size() << "\nHAcc(level) " << fixed2(head_level_accuracy(p, g)) << '\n';
  } else if (a.kind == "joint") {
    // pred.ptb pred.conll gold.ptb gold.conll
    const auto pc = parse_file(a.files[0], read_ptb);
    const auto pd = parse_file(a.files[1], read_conll);
    const auto gc = parse_file(a.files[2], read_ptb);
    const auto gd = parse_file(a.files[3], read_conll);
    check_count(pc.size(), gc.size());
    check_count(pd.size(), gd.size());
    check_count(pc.size(), pd.size());
    BracketCounts bc;
    AttachmentCounts ac;
    std::vector<HeadLevel> p, g;
    double span_heads = 0;
    for (std::size_t s = 0; s < gc.size(); ++s) {
      bc += bracket_counts(pc[s].tree, gc[s].tree);
      ac += attachment_counts(pd[s].tree, gd[s].tree, gd[s].sentence.pos_tags, punct);
      const auto pj = joint_from_parallel(tag_bare_terminals(pc[s].tree), pd[s].tree);
      const auto gj = joint_from_parallel(tag_bare_terminals(gc[s].tree), gd[s].tree);
      const auto pl = gold_head_levels(pj), gl = gold_head_levels(gj);
      p.insert(p.end(), pl.begin(), pl.end());
      g.insert(g.end(), gl.begin(), gl.end());
      span_heads += span_head_accuracy(pj, gj);
    }
    std::cout << "sentences " << gc.size() << "\nLP " << fixed2(bc.precision()) << "\nLR " << fixed2(bc.recall())
              << "\nLF1 " << fixed2(bc.f1()) << "\nUAS " << fixed2(ac.uas()) << "\nLAS " << fixed2(ac.las())
              << "\nHAcc(level) " << fixed2(head_level_accuracy(p, g)) << "\nHAcc(span-head) "
              << fixed2(gc.empty() ? 100.0 : span_heads / gc.size()) << '\n';
  } else {
    throw UsageError("eval kind must be const, dep, headlvl or joint");
  }
  return 0;
}

// --- synth ----------------------------------------------------------------

struct SynthArgs {
  std::string kind = "oracle";
  int count = 10;
  int min_len = 1, max_len = 10;
  std::uint64_t seed = 1;
  double margin = 1.0;
  bool nonprojective = false;
  std::string charts, const_out, dep_out, levels_out;
};

int cmd_synth(const SynthArgs& a) {
  if (a.min_len < 1 || a.max_len < a.min_len) throw UsageError("need 1 <= --min-len <= --max-len");
  std::mt19937_64 rng(a.seed);
  auto length = [&] { return std::uniform_int_distribution<int>(a.min_len, a.max_len)(rng); };
  const auto labels_c = default_const_labels();
  const auto labels_d = default_dep_labels();
  std::vector<NamedChart> charts;
  std::vector<PtbEntry> trees;
  std::vector<ConllEntry> deps;
  std::vector<std::vector<HeadLevel>> levels;
  for (int s = 0; s < a.count; ++s) {
    const std::string id = "s" + std::to_string(s + 1);
    const int n = length();
    if (a.kind == "random") {
      charts.push_back({id, random_chart(n, labels_c, labels_d, rng())});
    } else if (a.kind == "oracle") {
      const std::vector<std::string> gold_labels(labels_c.begin() + 1, labels_c.end());
      const auto gold = random_joint_tree(n, gold_labels, labels_d, rng());
      charts.push_back({id, oracle_chart(gold, a.margin)});
      trees.push_back({Sentence::placeholder(n), expand_unary(debinarize(gold.tree()))});
      deps.push_back({Sentence::placeholder(n), gold.dependencies()});
      levels.push_back(gold_head_levels(gold));
    } else if (a.kind == "deps") {
      if (a.nonprojective && n < 3) throw UsageError("non-projective trees need --min-len >= 3");
      const auto seed = rng();
      deps.push_back({random_sentence(n, {"NN", "VB", "DT", "JJ"}, seed),
                      a.nonprojective ? random_nonprojective_dep_tree(n, labels_d, seed)
                                      : random_projective_dep_tree(n, labels_d, seed)});
    } else {
      throw UsageError("synth kind must be oracle, random or deps");
    }
  }
  if (!a.charts.empty()) write_file(a.charts, write_charts(charts));
  if (!a.const_out.empty()) write_file(a.const_out, write_ptb(trees));
  if (!a.dep_out.empty()) write_file(a.dep_out, write_conll(deps));
  if (!a.levels_out.empty()) write_file(a.levels_out, write_levels(levels));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint constituency and dependency decoding"};
  app.require_subcommand(1);

  DecodeArgs decode_args;
  auto* decode_cmd = app.add_subcommand("decode", "Decode a chart file");
  decode_cmd->add_option("--algo", decode_args.algo, "cky, eisner, mst, hpsg or h3n")->capture_default_str();
  decode_cmd->add_option("charts", decode_args.charts, "Chart file")->required();
  decode_cmd->add_option("--const", decode_args.const_out, "Write constituent trees (bracketed)");
  decode_cmd->add_option("--dep", decode_args.dep_out, "Write dependency trees (CoNLL)");
  decode_cmd->add_option("--levels", decode_args.levels_out, "Write head levels of the decoded joint trees");
  decode_cmd->add_option("--sentences", decode_args.sentences, "CoNLL file supplying tokens and tags");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time decoders on seeded random charts");
  bench_cmd->add_option("--buckets", bench_args.buckets, "Lengths: L or LO-HI")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--algos", bench_args.algos, "Algorithms")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--sentences", bench_args.sentences, "Sentences per bucket")->capture_default_str();
  bench_cmd->add_option("--seed", bench_args.seed)->capture_default_str();
  bench_cmd->add_option("--repeats", bench_args.repeats)->capture_default_str();
  bench_cmd->add_option("--threads", bench_args.threads)->capture_default_str();
  bench_cmd->add_flag("--force", bench_args.force, "Run hpsg on buckets longer than 150");

  ConvertArgs convert_args;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between dependency and constituent trees");
  convert_cmd->add_option("direction", convert_args.direction, "d2c or c2d")->required();
  convert_cmd->add_option("input", convert_args.in)->required();
  convert_cmd->add_option("output", convert_args.out)->required();
  convert_cmd->add_option("--rules", convert_args.rules, "Head-rule file (c2d)");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Score predictions against gold");
  eval_cmd->add_option("kind", eval_args.kind, "const, dep, headlvl or joint")->required();
  eval_cmd->add_option("files", eval_args.files, "pred gold (joint: pred.ptb pred.conll gold.ptb gold.conll)")
      ->required();
  eval_cmd->add_option("--punct", eval_args.punct, "Comma-separated punctuation tags; \\, for a comma");

  SynthArgs synth_args;
  auto* synth_cmd = app.add_subcommand("synth", "Write seeded synthetic charts and trees");
  synth_cmd->add_option("--kind", synth_args.kind, "oracle, random or deps")->capture_default_str();
  synth_cmd->add_option("--count", synth_args.count)->capture_default_str();
  synth_cmd->add_option("--min-len", synth_args.min_len)->capture_default_str();
  synth_cmd->add_option("--max-len", synth_args.max_len)->capture_default_str();
  synth_cmd->add_option("--seed", synth_args.seed)->capture_default_str();
  synth_cmd->add_option("--margin", synth_args.margin)->capture_default_str();
  synth_cmd->add_flag("--nonprojective", synth_args.nonprojective);
  synth_cmd->add_option("--charts", synth_args.charts);
  synth_cmd->add_option("--const", synth_args.const_out);
  synth_cmd->add_option("--dep", synth_args.dep_out);
  synth_cmd->add_option("--levels", synth_args.levels_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decode_cmd) return cmd_decode(decode_args);
    if (*bench_cmd) return cmd_bench(bench_args);
    if (*convert_cmd) return cmd_convert(convert_args);
    if (*eval_cmd) return cmd_eval(eval_args);
    if (*synth_cmd) return cmd_synth(synth_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
