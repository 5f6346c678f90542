#pragma once

// Treebank file formats. Readers throw FormatError with a position: a byte
// offset for bracketed trees, a line number for CoNLL.

#include <string>
#include <string_view>
#include <vector>

#include "hdp/chart.hpp"
#include "hdp/trees.hpp"

namespace hdp {

struct PtbEntry {
  Sentence sentence;
  ConstTree tree;
};

// Bracketed trees, any whitespace layout. An unlabeled outer wrapper
// "( (S ...) )" is dropped. Words directly under a phrase (no tag) become
// bare terminals tagged "_".
std::vector<PtbEntry> read_ptb(std::string_view text);
// One tree per line.
std::string write_ptb_tree(const ConstTree& tree, const Sentence& sentence);
std::string write_ptb(const std::vector<PtbEntry>& entries);

struct ConllEntry {
  Sentence sentence;
  DepTree tree;
};

// Ten tab-separated columns; ID, FORM, POSTAG (5th), HEAD and DEPREL are
// read. Rows whose ID contains '-' or '.' and '#' comment lines are skipped.
std::vector<ConllEntry> read_conll(std::string_view text);
// Unused columns are written as "_".
std::string write_conll(const std::vector<ConllEntry>& entries);

// Head level classes, one sentence per line: integers or NONE.
std::vector<std::vector<HeadLevel>> read_levels(std::string_view text);
std::string write_levels(const std::vector<std::vector<HeadLevel>>& levels);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hdp
