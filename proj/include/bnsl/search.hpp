#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bnsl/network.hpp"
#include "bnsl/parent_graph.hpp"
#include "bnsl/varset.hpp"

namespace bnsl {

/// Node of the order lattice during search. g is the exact path length from
/// the root, h the heuristic estimate to the sink, f their sum. p is the
/// predecessor node's set; ext lists the variables appended by path
/// extension after the single expansion step that left p.
struct SearchState {
    VarSet set;
    double g = 0.0;
    double h = 0.0;
    double f = 0.0;
    VarSet p;
    std::vector<VarId> ext;
};

/// Per-node bookkeeping shared by the open and closed lists.
struct StateRecord {
    double g = 0.0;
    double h = 0.0;
    double f = 0.0;
    VarSet p;
    std::vector<VarId> ext;
    bool closed = false;
};

using StateMap = std::unordered_map<std::uint64_t, StateRecord>;

struct SearchStats {
    std::uint64_t expanded = 0;      // nodes whose successors were generated
    std::uint64_t generated = 0;     // successor states created
    std::uint64_t extended_vars = 0; // variables added by path extension
    std::uint64_t peak_open = 0;
    std::uint64_t peak_closed = 0;
};

struct SearchResult {
    LearnedNetwork network;
    SearchStats stats;
    double goal_g = 0.0; // path length at the goal state, before reconstruction
};

/// One frontier removal, in pop order.
struct ExpansionTraceEntry {
    std::uint64_t bits;
    double f;
};

/// h(set) = sum of best(X_i).score over all X_i outside set. Consistent:
/// the per-step drop equals the best score of the variable added, which
/// never exceeds the edge cost d.
double heuristic(const ParentGraph& pg, VarSet set);

/// Repeatedly adds every variable whose optimal parent set is already
/// contained in the state's set (ascending VarId, passes until a fixpoint).
/// g and h shift by the same amount, so f is unchanged.
SearchState path_extension(const ParentGraph& pg, SearchState state);

/// Shortest path from the empty set to the full set over the order lattice.
/// When trace is given it receives every live pop including the goal.
SearchResult astar(const ParentGraph& pg, bool use_extension,
                   std::vector<ExpansionTraceEntry>* trace = nullptr);

/// Layer-by-layer dynamic programming over the lattice; keeps the best g
/// per node. Without extension this visits all 2^n nodes. When processed is
/// given it receives every node consumed from its layer bucket.
SearchResult bfs(const ParentGraph& pg, bool use_extension,
                 std::vector<std::uint64_t>* processed = nullptr);

} // namespace bnsl
