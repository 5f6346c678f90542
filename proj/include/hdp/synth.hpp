#pragma once

// Seeded generators for synthetic trees and corpora (tests, benchmarks, and
// the `synth` command).

#include <cstdint>
#include <string>
#include <vector>

#include "hdp/trees.hpp"

namespace hdp {

struct TreeShapeOptions {
  int max_children = 4;
  double unary_probability = 0.15;  // chance of wrapping a node in a unary parent
};

// n-ary tree with a pre-terminal over every word. Pre-terminals take labels
// from `preterminal_labels`, other nodes from `phrase_labels`.
ConstTree random_const_tree(int n, const std::vector<std::string>& phrase_labels,
                            const std::vector<std::string>& preterminal_labels, std::uint64_t seed,
                            const TreeShapeOptions& options = {});

// Gold joint tree reachable by the joint decoders: a random n-ary tree,
// unary-collapsed and right-binarized, with random head choices wherever the
// head child may carry a non-empty label. `labels_c` must not contain the
// empty label.
JointTree random_joint_tree(int n, const std::vector<std::string>& labels_c,
                            const std::vector<std::string>& labels_d, std::uint64_t seed,
                            const TreeShapeOptions& options = {});

DepTree random_projective_dep_tree(int n, const std::vector<std::string>& labels, std::uint64_t seed);
// Rejection-samples until the tree is non-projective; requires n >= 3.
DepTree random_nonprojective_dep_tree(int n, const std::vector<std::string>& labels, std::uint64_t seed);

// Random lowercase tokens with the given tags cycled by position-independent draws.
Sentence random_sentence(int n, const std::vector<std::string>& tags, std::uint64_t seed);

// The pre-terminal labels of a tree, in word order.
std::vector<std::string> preterminal_labels(const ConstTree& tree);

}  // namespace hdp
