#pragma once

#include <string>
#include <vector>

#include "bnsl/varset.hpp"

namespace bnsl {

/// Result of structure learning: a topological ordering, the parent set
/// chosen for each variable, and the total score (sum of local scores,
/// lower is better). parents[i] is always a subset of the variables that
/// precede variable i in the ordering, so the induced graph is acyclic.
struct LearnedNetwork {
    std::vector<VarId> ordering;
    std::vector<VarSet> parents;
    double score = 0.0;

    int var_count() const { return static_cast<int>(ordering.size()); }
};

/// Text rendering: "score <value>" then one "<child> <- <parents...>" line
/// per variable in ordering order. Scores use 17 significant digits so the
/// file round-trips bit-exactly.
std::string to_text(const LearnedNetwork& net, const std::vector<std::string>& names);

/// Graphviz rendering with one edge per (parent, child) pair.
std::string to_dot(const LearnedNetwork& net, const std::vector<std::string>& names);

} // namespace bnsl
