#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bnsl/dataset.hpp"
#include "bnsl/parent_graph.hpp"
#include "bnsl/scoring.hpp"
#include "bnsl/varset.hpp"

namespace bnsl {

/// Exponential reference implementations used to validate the fast paths.
/// Everything here trades time for directness on purpose.
namespace oracle {

/// Best achievable local score for the child over ALL subsets of u, by
/// exhaustive enumeration straight from the scorer.
double d_bruteforce(const Scorer& scorer, const Dataset& d, VarId child, VarSet u);

/// Optimal network score by enumerating all n! orderings against scorer
/// values. Requires n <= 8. Returns the score and the first optimal
/// ordering in lexicographic order.
std::pair<double, std::vector<VarId>> best_score_bruteforce(const Scorer& scorer,
                                                            const Dataset& d);

/// Same enumeration, but d-values come from a parent graph.
std::pair<double, std::vector<VarId>> best_score_bruteforce(const ParentGraph& pg);

/// Number of labeled DAGs on n nodes via the alternating recurrence.
/// Requires n <= 12; already past 64 bits from n = 11 on.
using DagCount = unsigned __int128;
DagCount count_dags(int n);
std::string dag_count_to_string(DagCount value);

/// Minimum network score over every DAG on n nodes, by enumerating all
/// edge subsets and discarding cyclic ones. Requires n <= 4.
struct DagEnumeration {
    double best_score = 0.0;
    std::uint64_t dags = 0; // acyclic graphs visited
};
DagEnumeration enumerate_dags_score(const Scorer& scorer, const Dataset& d);

} // namespace oracle
} // namespace bnsl
