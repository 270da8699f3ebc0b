#include "bnsl/search.hpp"

#include <cassert>
#include <queue>

#include "bnsl/errors.hpp"
#include "bnsl/reconstruct.hpp"

namespace bnsl {

double heuristic(const ParentGraph& pg, VarSet set) {
    double h = 0.0;
    for (int i = 0; i < pg.var_count(); ++i)
        if (!set.contains(VarId{i})) h += pg.best(VarId{i}).score;
    return h;
}

SearchState path_extension(const ParentGraph& pg, SearchState state) {
    const int n = pg.var_count();
    bool extended = true;
    while (extended) {
        extended = false;
        for (int i = 0; i < n; ++i) {
            VarId xi{i};
            if (state.set.contains(xi)) continue;
            const PgEntry& best = pg.best(xi);
            if (best.set.subset_of(state.set) || pg.query_d(xi, state.set) == best.score) {
                state.g += best.score;
                state.h -= best.score;
                state.set = state.set.with(xi);
                state.ext.push_back(xi);
                extended = true;
            }
        }
    }
    return state;
}

namespace {

struct HeapEntry {
    double f;
    int card;
    std::uint64_t bits;
    double g; // snapshot to recognize stale entries
};

// Pop order: smallest f, then largest cardinality, then smallest bitmask.
struct HeapAfter {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.card != b.card) return a.card < b.card;
        return a.bits > b.bits;
    }
};

} // namespace

SearchResult astar(const ParentGraph& pg, bool use_extension,
                   std::vector<ExpansionTraceEntry>* trace) {
    const int n = pg.var_count();
    const VarSet universe = full_set(n);
    StateMap states;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapAfter> open;
    SearchStats stats;
    std::uint64_t open_size = 0;
    std::uint64_t closed_size = 0;

    const double root_h = heuristic(pg, VarSet());
    states.emplace(0, StateRecord{0.0, root_h, root_h, VarSet(), {}, false});
    open.push({root_h, 0, 0, 0.0});
    open_size = 1;
    stats.peak_open = 1;

    while (!open.empty()) {
        HeapEntry top = open.top();
        open.pop();
        auto it = states.find(top.bits);
        assert(it != states.end());
        if (it->second.closed || it->second.g != top.g) continue; // stale duplicate
        it->second.closed = true;
        --open_size;
        ++closed_size;
        if (closed_size > stats.peak_closed) stats.peak_closed = closed_size;

        const VarSet v_set(top.bits);
        const double v_g = it->second.g;
        const double v_h = it->second.h;
        if (trace) trace->push_back({top.bits, it->second.f});

        if (v_set == universe)
            return {build_network(pg, backtrack(v_set, states)), stats, v_g};

        ++stats.expanded;
        for (int i = 0; i < n; ++i) {
            VarId xi{i};
            if (v_set.contains(xi)) continue;
            const double edge = pg.query_d(xi, v_set);
            const double best_i = pg.best(xi).score;
            assert(best_i <= edge); // heuristic consistency per expansion

            SearchState u;
            u.g = v_g + edge;
            u.h = v_h - best_i;
            u.f = u.g + u.h;
            u.set = v_set.with(xi);
            u.p = v_set;
            if (use_extension) {
                u = path_extension(pg, u);
                stats.extended_vars += u.ext.size();
            }
            ++stats.generated;

            auto [uit, inserted] = states.try_emplace(u.set.bits());
            StateRecord& urec = uit->second;
            if (inserted) {
                urec = StateRecord{u.g, u.h, u.f, u.p, std::move(u.ext), false};
                open.push({urec.f, u.set.size(), u.set.bits(), urec.g});
                ++open_size;
                if (open_size > stats.peak_open) stats.peak_open = open_size;
            } else if (!urec.closed && u.g < urec.g) {
                urec = StateRecord{u.g, u.h, u.f, u.p, std::move(u.ext), false};
                open.push({urec.f, u.set.size(), u.set.bits(), urec.g});
            }
        }
    }
    throw Error("order-lattice search exhausted without reaching the goal");
}

SearchResult bfs(const ParentGraph& pg, bool use_extension,
                 std::vector<std::uint64_t>* processed) {
    const int n = pg.var_count();
    const VarSet universe = full_set(n);
    StateMap closed;
    std::vector<StateMap> buckets(static_cast<std::size_t>(n) + 1);
    SearchStats stats;
    std::uint64_t pending = 0;

    buckets[0].emplace(0, StateRecord{0.0, 0.0, 0.0, VarSet(), {}, false});
    pending = 1;
    stats.peak_open = 1;

    for (int k = 0; k <= n; ++k) {
        auto& bucket = buckets[static_cast<std::size_t>(k)];
        std::vector<std::uint64_t> keys;
        keys.reserve(bucket.size());
        for (const auto& [bits, rec] : bucket) keys.push_back(bits);
        std::sort(keys.begin(), keys.end());

        for (std::uint64_t bits : keys) {
            StateRecord rec = std::move(bucket.at(bits));
            rec.closed = true;
            ++stats.expanded;
            --pending;
            if (processed) processed->push_back(bits);
            const VarSet v_set(bits);
            const double v_g = rec.g;
            closed.emplace(bits, std::move(rec));
            if (closed.size() > stats.peak_closed) stats.peak_closed = closed.size();
            if (v_set == universe) continue;

            for (int i = 0; i < n; ++i) {
                VarId xi{i};
                if (v_set.contains(xi)) continue;
                SearchState u;
                u.g = v_g + pg.query_d(xi, v_set);
                u.set = v_set.with(xi);
                u.p = v_set;
                if (use_extension) {
                    u = path_extension(pg, u);
                    stats.extended_vars += u.ext.size();
                }
                ++stats.generated;

                auto& target = buckets[static_cast<std::size_t>(u.set.size())];
                auto [uit, inserted] = target.try_emplace(u.set.bits());
                StateRecord& urec = uit->second;
                if (inserted) {
                    urec = StateRecord{u.g, 0.0, u.g, u.p, std::move(u.ext), false};
                    ++pending;
                    if (pending > stats.peak_open) stats.peak_open = pending;
                } else if (u.g < urec.g) {
                    urec = StateRecord{u.g, 0.0, u.g, u.p, std::move(u.ext), false};
                }
            }
        }
        bucket.clear();
    }

    auto goal = closed.find(universe.bits());
    if (goal == closed.end())
        throw Error("order-lattice sweep never reached the goal");
    return {build_network(pg, backtrack(universe, closed)), stats, goal->second.g};
}

} // namespace bnsl
