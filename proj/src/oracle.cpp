#include "bnsl/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "bnsl/errors.hpp"

namespace bnsl {
namespace oracle {

double d_bruteforce(const Scorer& scorer, const Dataset& d, VarId child, VarSet u) {
    double best = scorer.local_score(d, child, VarSet());
    for (std::uint64_t sub = u.bits(); sub != 0; sub = (sub - 1) & u.bits()) {
        double s = scorer.local_score(d, child, VarSet(sub));
        if (s < best) best = s;
    }
    return best;
}

namespace {

/// d(child, mask) for every mask, tabulated by the subset-minimum sweep.
std::vector<std::vector<double>> d_tables(const Scorer& scorer, const Dataset& d) {
    const int n = d.n;
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::vector<double>> tables(static_cast<std::size_t>(n));
    for (int child = 0; child < n; ++child) {
        auto& table = tables[static_cast<std::size_t>(child)];
        table.assign(size, 0.0);
        const std::uint64_t child_bit = std::uint64_t{1} << child;
        for (std::uint64_t mask = 0; mask < size; ++mask) {
            if (mask & child_bit) continue;
            double value = scorer.local_score(d, VarId{child}, VarSet(mask));
            for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
                std::uint64_t smaller = mask ^ (rest & -rest);
                if (table[smaller] < value) value = table[smaller];
            }
            table[mask] = value;
        }
    }
    return tables;
}

std::pair<double, std::vector<VarId>> best_over_orderings(
    int n, const std::vector<std::vector<double>>& d_of_child_given_mask) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    double best = 0.0;
    std::vector<int> best_perm;
    do {
        double total = 0.0;
        std::uint64_t preds = 0;
        for (int child : perm) {
            total += d_of_child_given_mask[static_cast<std::size_t>(child)][preds];
            preds |= std::uint64_t{1} << child;
        }
        if (best_perm.empty() || total < best) {
            best = total;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<VarId> ordering;
    ordering.reserve(best_perm.size());
    for (int v : best_perm) ordering.push_back(VarId{v});
    return {best, ordering};
}

} // namespace

std::pair<double, std::vector<VarId>> best_score_bruteforce(const Scorer& scorer,
                                                            const Dataset& d) {
    if (d.n > 8)
        throw CapacityError("ordering enumeration limited to 8 variables, got " +
                            std::to_string(d.n));
    return best_over_orderings(d.n, d_tables(scorer, d));
}

std::pair<double, std::vector<VarId>> best_score_bruteforce(const ParentGraph& pg) {
    const int n = pg.var_count();
    if (n > 8)
        throw CapacityError("ordering enumeration limited to 8 variables, got " +
                            std::to_string(n));
    std::vector<std::vector<double>> tables(static_cast<std::size_t>(n));
    const std::uint64_t size = std::uint64_t{1} << n;
    for (int child = 0; child < n; ++child) {
        auto& table = tables[static_cast<std::size_t>(child)];
        table.assign(size, 0.0);
        const std::uint64_t child_bit = std::uint64_t{1} << child;
        for (std::uint64_t mask = 0; mask < size; ++mask)
            if (!(mask & child_bit)) table[mask] = pg.query_d(VarId{child}, VarSet(mask));
    }
    return best_over_orderings(n, tables);
}

DagCount count_dags(int n) {
    if (n < 1 || n > 12)
        throw CapacityError("DAG counting limited to 12 nodes, got " + std::to_string(n));

    // binom up to 12 fits comfortably in 64 bits
    std::uint64_t binom[13][13] = {};
    for (int a = 0; a <= 12; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
    }

    std::vector<__int128> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        __int128 total = 0;
        for (int i = 1; i <= k; ++i) {
            __int128 term = static_cast<__int128>(binom[k][i]);
            term *= static_cast<__int128>(1) << (i * (k - i));
            term *= c[static_cast<std::size_t>(k - i)];
            total += (i % 2 == 1) ? term : -term;
        }
        c[static_cast<std::size_t>(k)] = total;
    }
    return static_cast<DagCount>(c[static_cast<std::size_t>(n)]);
}

std::string dag_count_to_string(DagCount value) {
    if (value == 0) return "0";
    std::string out;
    while (value != 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    return out;
}

DagEnumeration enumerate_dags_score(const Scorer& scorer, const Dataset& d) {
    const int n = d.n;
    if (n > 4)
        throw CapacityError("DAG enumeration limited to 4 variables, got " + std::to_string(n));

    // memoize local scores over all (child, parent-mask) pairs
    std::vector<std::vector<double>> s(static_cast<std::size_t>(n));
    const std::uint64_t mask_count = std::uint64_t{1} << n;
    for (int child = 0; child < n; ++child) {
        s[static_cast<std::size_t>(child)].assign(mask_count, 0.0);
        for (std::uint64_t mask = 0; mask < mask_count; ++mask)
            if (!(mask >> child & 1))
                s[static_cast<std::size_t>(child)][mask] =
                    scorer.local_score(d, VarId{child}, VarSet(mask));
    }

    // edge slot e = child * (n-1) + position over the other variables
    const int slots = n * (n - 1);
    DagEnumeration result;
    for (std::uint64_t edges = 0; edges < (std::uint64_t{1} << slots); ++edges) {
        std::uint64_t parent_mask[4] = {};
        int slot = 0;
        for (int child = 0; child < n; ++child)
            for (int parent = 0; parent < n; ++parent) {
                if (parent == child) continue;
                if (edges >> slot & 1) parent_mask[child] |= std::uint64_t{1} << parent;
                ++slot;
            }

        // peel vertices with no remaining parents; acyclic iff all peel off
        std::uint64_t removed = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int v = 0; v < n; ++v) {
                if (removed >> v & 1) continue;
                if ((parent_mask[v] & ~removed) == 0) {
                    removed |= std::uint64_t{1} << v;
                    progress = true;
                }
            }
        }
        if (std::popcount(removed) != n) continue;

        double total = 0.0;
        for (int child = 0; child < n; ++child)
            total += s[static_cast<std::size_t>(child)][parent_mask[child]];
        if (result.dags == 0 || total < result.best_score) result.best_score = total;
        ++result.dags;
    }
    return result;
}

} // namespace oracle
} // namespace bnsl
