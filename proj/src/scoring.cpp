#include "bnsl/scoring.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <unordered_map>

#include "bnsl/errors.hpp"

namespace bnsl {

std::uint32_t ContingencyTable::count(std::uint64_t config, std::uint32_t child_value) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), config,
                               [](const Cell& c, std::uint64_t key) { return c.config < key; });
    if (it == cells.end() || it->config != config) return 0;
    return it->counts[child_value];
}

std::uint64_t ContingencyTable::total() const {
    std::uint64_t sum = 0;
    for (const auto& cell : cells)
        for (std::uint32_t c : cell.counts) sum += c;
    return sum;
}

ContingencyTable contingency_counts(const Dataset& d, VarId child, VarSet parents) {
    assert(!parents.contains(child));
    ContingencyTable table;
    table.child_arity = d.arities[static_cast<std::size_t>(child.value)];

    const auto parent_ids = parents.members();
    table.config_count = 1.0;
    for (VarId p : parent_ids) table.config_count *= static_cast<double>(d.arities[static_cast<std::size_t>(p.value)]);

    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> counts;
    counts.reserve(static_cast<std::size_t>(d.m));
    for (int row = 0; row < d.m; ++row) {
        std::uint64_t config = 0;
        for (VarId p : parent_ids)
            config = config * d.arities[static_cast<std::size_t>(p.value)] + d.code(p, row);
        auto& cell = counts[config];
        if (cell.empty()) cell.assign(table.child_arity, 0);
        ++cell[d.code(child, row)];
    }

    table.cells.reserve(counts.size());
    for (auto& [config, cell] : counts) table.cells.push_back({config, std::move(cell)});
    std::sort(table.cells.begin(), table.cells.end(),
              [](const auto& a, const auto& b) { return a.config < b.config; });
    return table;
}

double MdlScorer::local_score(const Dataset& d, VarId child, VarSet parents) const {
    ContingencyTable table = contingency_counts(d, child, parents);

    // H = -sum N(x,u) log2(N(x,u)/N(u)), with 0 log 0 = 0. Cells iterate in
    // ascending config order so the sum is reproducible.
    double entropy = 0.0;
    for (const auto& cell : table.cells) {
        std::uint64_t config_total = 0;
        for (std::uint32_t c : cell.counts) config_total += c;
        for (std::uint32_t c : cell.counts) {
            if (c == 0) continue;
            entropy -= static_cast<double>(c) *
                       std::log2(static_cast<double>(c) / static_cast<double>(config_total));
        }
    }

    // Penalty counts nominal configurations, including unobserved ones.
    double free_params = static_cast<double>(table.child_arity - 1) * table.config_count;
    double penalty = 0.5 * std::log2(static_cast<double>(d.m)) * free_params;
    return entropy + penalty;
}

std::unique_ptr<Scorer> make_scorer(const std::string& name) {
    if (name == "mdl") return std::make_unique<MdlScorer>();
    throw Error("unknown scoring criterion '" + name + "'");
}

} // namespace bnsl
