#include "bnsl/parent_graph.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "bnsl/errors.hpp"

namespace bnsl {

bool pg_entry_less(const PgEntry& a, const PgEntry& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
    return a.set.bits() < b.set.bits();
}

namespace {

/// Layered DP over the subsets of candidates for one child. Only the
/// previous layer's d-values stay resident.
std::vector<PgEntry> build_one(const Dataset& d, const Scorer& scorer, VarId child,
                               int max_parents) {
    std::vector<PgEntry> entries;
    const VarSet empty;
    const double s_empty = scorer.local_score(d, child, empty);
    entries.push_back({empty, s_empty});

    std::vector<VarId> candidates;
    for (int i = 0; i < d.n; ++i)
        if (i != child.value) candidates.push_back(VarId{i});
    const int c = static_cast<int>(candidates.size());

    std::unordered_map<std::uint64_t, double> prev;
    prev.emplace(0, s_empty);

    for (int k = 1; k <= max_parents && k <= c; ++k) {
        std::unordered_map<std::uint64_t, double> cur;
        // enumerate k-combinations of candidate positions
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
        while (true) {
            VarSet u;
            for (int j : idx) u = u.with(candidates[static_cast<std::size_t>(j)]);

            double best_sub = prev.at(u.without(candidates[static_cast<std::size_t>(idx[0])]).bits());
            for (int j = 1; j < k; ++j) {
                double sub = prev.at(u.without(candidates[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]).bits());
                if (sub < best_sub) best_sub = sub;
            }

            double s = scorer.local_score(d, child, u);
            if (s < best_sub) {
                entries.push_back({u, s});
                cur.emplace(u.bits(), s);
            } else {
                cur.emplace(u.bits(), best_sub);
            }

            // next combination
            int j = k - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == c - k + j) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int l = j + 1; l < k; ++l)
                idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
        }
        prev = std::move(cur);
    }

    std::sort(entries.begin(), entries.end(), pg_entry_less);
    return entries;
}

void validate_vectors(int n, const std::vector<std::vector<PgEntry>>& vectors) {
    if (n < 1 || n > kMaxVars) throw PgraphFormatError("variable count out of range");
    if (static_cast<int>(vectors.size()) != n) throw PgraphFormatError("wrong number of variable vectors");
    const VarSet universe = full_set(n);
    for (int i = 0; i < n; ++i) {
        const auto& vec = vectors[static_cast<std::size_t>(i)];
        if (vec.empty()) throw PgraphFormatError("empty vector for variable " + std::to_string(i));
        bool has_empty = false;
        for (std::size_t e = 0; e < vec.size(); ++e) {
            if (!vec[e].set.subset_of(universe))
                throw PgraphFormatError("entry set outside universe for variable " + std::to_string(i));
            if (vec[e].set.contains(VarId{i}))
                throw PgraphFormatError("entry set contains its own child variable " + std::to_string(i));
            if (!std::isfinite(vec[e].score))
                throw PgraphFormatError("non-finite score for variable " + std::to_string(i));
            if (vec[e].set.empty()) has_empty = true;
            if (e > 0 && !pg_entry_less(vec[e - 1], vec[e]))
                throw PgraphFormatError("unsorted or duplicate entries for variable " + std::to_string(i));
        }
        if (!has_empty)
            throw PgraphFormatError("missing empty-set entry for variable " + std::to_string(i));
    }
}

} // namespace

ParentGraph ParentGraph::build(const Dataset& d, const Scorer& scorer, int max_parents,
                               int threads) {
    if (max_parents < 0) throw Error("max_parents must be non-negative");
    if (max_parents > d.n - 1) max_parents = d.n - 1;

    ParentGraph pg;
    pg.n_ = d.n;
    pg.vectors_.assign(static_cast<std::size_t>(d.n), {});

    if (threads <= 1 || d.n == 1) {
        for (int i = 0; i < d.n; ++i)
            pg.vectors_[static_cast<std::size_t>(i)] = build_one(d, scorer, VarId{i}, max_parents);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        int worker_count = std::min(threads, d.n);
        for (int w = 0; w < worker_count; ++w) {
            pool.emplace_back([&]() {
                for (int i = next.fetch_add(1); i < d.n; i = next.fetch_add(1))
                    pg.vectors_[static_cast<std::size_t>(i)] = build_one(d, scorer, VarId{i}, max_parents);
            });
        }
        for (auto& t : pool) t.join();
    }
    return pg;
}

ParentGraph ParentGraph::from_entries(int n, std::vector<std::vector<PgEntry>> vectors) {
    validate_vectors(n, vectors);
    ParentGraph pg;
    pg.n_ = n;
    pg.vectors_ = std::move(vectors);
    return pg;
}

double ParentGraph::query_d(VarId child, VarSet u) const {
    assert(!u.contains(child));
    for (const auto& entry : vectors_[static_cast<std::size_t>(child.value)])
        if (entry.set.subset_of(u)) return entry.score;
    throw PgraphFormatError("no candidate parent set answers query for variable " +
                            std::to_string(child.value));
}

std::size_t ParentGraph::entry_count() const {
    std::size_t total = 0;
    for (const auto& vec : vectors_) total += vec.size();
    return total;
}

double ParentGraph::reduction_ratio() const {
    return std::ldexp(static_cast<double>(n_), n_ - 1) / static_cast<double>(entry_count());
}

void ParentGraph::serialize(std::ostream& out) const {
    out << "pgraph 1 " << n_ << "\n";
    char buf[64];
    for (int i = 0; i < n_; ++i) {
        const auto& vec = vectors_[static_cast<std::size_t>(i)];
        out << "var " << i << " " << vec.size() << "\n";
        for (const auto& entry : vec) {
            std::snprintf(buf, sizeof buf, "%.17g", entry.score);
            out << entry.set.to_hex() << " " << buf << "\n";
        }
    }
}

ParentGraph ParentGraph::deserialize(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw PgraphFormatError("empty parent-graph file");
    std::istringstream header(line);
    std::string magic;
    int version = 0, n = 0;
    if (!(header >> magic >> version >> n) || magic != "pgraph" || version != 1)
        throw PgraphFormatError("bad parent-graph header '" + line + "'");
    if (n < 1 || n > kMaxVars) throw PgraphFormatError("variable count out of range");

    std::vector<std::vector<PgEntry>> vectors(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw PgraphFormatError("truncated file: missing vector for variable " + std::to_string(i));
        std::istringstream var_header(line);
        std::string keyword;
        int var = -1;
        std::size_t count = 0;
        if (!(var_header >> keyword >> var >> count) || keyword != "var" || var != i)
            throw PgraphFormatError("bad variable header '" + line + "'");
        auto& vec = vectors[static_cast<std::size_t>(i)];
        vec.reserve(count);
        for (std::size_t e = 0; e < count; ++e) {
            if (!std::getline(in, line))
                throw PgraphFormatError("truncated file: entry count mismatch for variable " +
                                        std::to_string(i));
            std::istringstream entry_line(line);
            std::string set_hex, score_text;
            if (!(entry_line >> set_hex >> score_text))
                throw PgraphFormatError("bad entry line '" + line + "'");
            char* end = nullptr;
            double score = std::strtod(score_text.c_str(), &end);
            if (end == score_text.c_str() || *end != '\0')
                throw PgraphFormatError("bad score '" + score_text + "'");
            VarSet set;
            try {
                set = VarSet::from_hex(set_hex);
            } catch (const ParseError&) {
                throw PgraphFormatError("bad set literal '" + set_hex + "'");
            }
            vec.push_back({set, score});
        }
    }
    return from_entries(n, std::move(vectors));
}

} // namespace bnsl
