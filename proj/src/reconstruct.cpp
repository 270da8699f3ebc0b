#include "bnsl/reconstruct.hpp"

#include <cassert>

#include "bnsl/errors.hpp"

namespace bnsl {

std::vector<VarId> backtrack(VarSet goal_set, const StateMap& closed) {
    std::vector<VarId> ordering;
    VarSet cur = goal_set;
    while (!cur.empty()) {
        auto it = closed.find(cur.bits());
        if (it == closed.end())
            throw Error("broken predecessor chain at node " + cur.to_hex());
        const StateRecord& rec = it->second;

        VarSet ext_mask;
        for (VarId v : rec.ext) ext_mask = ext_mask.with(v);
        const VarSet expansion(cur.bits() & ~rec.p.bits() & ~ext_mask.bits());
        if (expansion.size() != 1)
            throw Error("corrupt search state at node " + cur.to_hex());

        std::vector<VarId> hop;
        hop.reserve(1 + rec.ext.size());
        hop.push_back(expansion.members().front());
        hop.insert(hop.end(), rec.ext.begin(), rec.ext.end());
        ordering.insert(ordering.begin(), hop.begin(), hop.end());
        cur = rec.p;
    }
    return ordering;
}

LearnedNetwork build_network(const ParentGraph& pg, const std::vector<VarId>& ordering) {
    assert(static_cast<int>(ordering.size()) == pg.var_count());
    LearnedNetwork net;
    net.ordering = ordering;
    net.parents.assign(ordering.size(), VarSet());
    net.score = 0.0;

    VarSet preds;
    for (VarId child : ordering) {
        assert(!preds.contains(child));
        bool found = false;
        for (const auto& entry : pg.vector_for(child)) {
            if (entry.set.subset_of(preds)) {
                net.parents[static_cast<std::size_t>(child.value)] = entry.set;
                net.score += entry.score;
                found = true;
                break;
            }
        }
        if (!found)
            throw PgraphFormatError("no candidate parent set answers query for variable " +
                                    std::to_string(child.value));
        preds = preds.with(child);
    }
    return net;
}

} // namespace bnsl
