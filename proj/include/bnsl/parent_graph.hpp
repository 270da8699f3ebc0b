#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bnsl/dataset.hpp"
#include "bnsl/scoring.hpp"
#include "bnsl/varset.hpp"

namespace bnsl {

/// One candidate parent set and its local score.
struct PgEntry {
    VarSet set;
    double score = 0.0;
};

/// Entry ordering inside a variable's vector: ascending score, then smaller
/// cardinality, then smaller bitmask.
bool pg_entry_less(const PgEntry& a, const PgEntry& b);

/// Per-variable vectors of maximal candidate parent sets, sorted ascending
/// by score. A set is stored only when it scores strictly better than every
/// proper subset, so the first entry whose set is contained in U answers
/// d(child, U), and the front entry is the globally optimal parent set.
class ParentGraph {
public:
    /// Evaluate the scorer over all candidate sets up to max_parents,
    /// layer by layer, keeping only maximal sets. Parallelizes over child
    /// variables when threads > 1.
    static ParentGraph build(const Dataset& d, const Scorer& scorer, int max_parents,
                             int threads = 1);

    /// Assemble from externally produced vectors, validating structure.
    static ParentGraph from_entries(int n, std::vector<std::vector<PgEntry>> vectors);

    int var_count() const { return n_; }
    const std::vector<PgEntry>& vector_for(VarId child) const {
        return vectors_[static_cast<std::size_t>(child.value)];
    }

    /// d(child, u): score of the first entry whose set is a subset of u.
    double query_d(VarId child, VarSet u) const;

    /// Optimal parent set for the child over all other variables (front entry).
    const PgEntry& best(VarId child) const {
        return vectors_[static_cast<std::size_t>(child.value)].front();
    }

    std::size_t entry_count() const;

    /// Ratio of full d-memoization (n * 2^(n-1) values) to stored entries.
    double reduction_ratio() const;

    void serialize(std::ostream& out) const;
    static ParentGraph deserialize(std::istream& in);

private:
    ParentGraph() = default;
    int n_ = 0;
    std::vector<std::vector<PgEntry>> vectors_;
};

} // namespace bnsl
