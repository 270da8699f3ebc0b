#pragma once

#include <vector>

#include "bnsl/network.hpp"
#include "bnsl/parent_graph.hpp"
#include "bnsl/search.hpp"

namespace bnsl {

/// Walk predecessor links from the goal set back to the root. Each hop
/// contributes its expansion variable followed by the extension sequence;
/// the reversed concatenation is the optimal ordering.
std::vector<VarId> backtrack(VarSet goal_set, const StateMap& closed);

/// Recover the explicit network for an ordering: each variable takes the
/// first parent-graph entry contained in its predecessors; the score is the
/// sum of those entries' scores.
LearnedNetwork build_network(const ParentGraph& pg, const std::vector<VarId>& ordering);

} // namespace bnsl
