#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bnsl/dataset.hpp"
#include "bnsl/varset.hpp"

namespace bnsl {

/// Joint counts N(x, u) of a child variable against each configuration of
/// its parents. Configurations are mixed-radix indices over the parents in
/// ascending VarId order; only observed configurations are materialized.
struct ContingencyTable {
    std::uint32_t child_arity = 0;
    double config_count = 0.0; // nominal q = product of parent arities
    struct Cell {
        std::uint64_t config;
        std::vector<std::uint32_t> counts; // indexed by child value
    };
    std::vector<Cell> cells; // sorted by config

    std::uint32_t count(std::uint64_t config, std::uint32_t child_value) const;
    std::uint64_t total() const;
};

ContingencyTable contingency_counts(const Dataset& d, VarId child, VarSet parents);

/// Decomposable local score s(child, parents); lower is better.
class Scorer {
public:
    virtual ~Scorer() = default;
    virtual double local_score(const Dataset& d, VarId child, VarSet parents) const = 0;
};

/// Two-part description length in bits: empirical conditional entropy of
/// the child given the parents plus (log2 m)/2 per free parameter, with
/// (r_child - 1) * prod(r_parent) free parameters.
class MdlScorer final : public Scorer {
public:
    double local_score(const Dataset& d, VarId child, VarSet parents) const override;
};

std::unique_ptr<Scorer> make_scorer(const std::string& name); // "mdl"

} // namespace bnsl
