#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bnsl/dataset.hpp"
#include "bnsl/scoring.hpp"

using namespace bnsl;

namespace {

Dataset make_dataset(std::vector<std::vector<std::uint32_t>> columns) {
    Dataset d;
    d.n = static_cast<int>(columns.size());
    d.m = static_cast<int>(columns.front().size());
    d.columns = std::move(columns);
    for (const auto& col : d.columns)
        d.arities.push_back(*std::max_element(col.begin(), col.end()) + 1);
    for (int i = 0; i < d.n; ++i) d.names.push_back("X" + std::to_string(i));
    return d;
}

Dataset random_dataset(std::mt19937& rng, int n, int m, int max_arity = 3) {
    std::vector<std::vector<std::uint32_t>> columns(static_cast<std::size_t>(n));
    for (auto& col : columns) {
        std::uint32_t arity = 2 + rng() % static_cast<std::uint32_t>(max_arity - 1);
        col.reserve(static_cast<std::size_t>(m));
        for (int row = 0; row < m; ++row) col.push_back(rng() % arity);
        col[0] = arity - 1; // pin the arity regardless of the draw
    }
    return make_dataset(std::move(columns));
}

} // namespace

TEST_CASE("contingency counts without parents") {
    Dataset d = make_dataset({{0, 0, 1, 1}});
    ContingencyTable t = contingency_counts(d, VarId{0}, VarSet{});
    CHECK(t.child_arity == 2);
    CHECK(t.config_count == 1.0);
    CHECK(t.count(0, 0) == 2);
    CHECK(t.count(0, 1) == 2);
    CHECK(t.total() == 4);
}

TEST_CASE("contingency counts of a child equal to its parent are diagonal") {
    Dataset d = make_dataset({{0, 1, 0, 1}, {0, 1, 0, 1}});
    ContingencyTable t = contingency_counts(d, VarId{1}, VarSet{0b01});
    CHECK(t.count(0, 0) == 2);
    CHECK(t.count(1, 1) == 2);
    CHECK(t.count(0, 1) == 0);
    CHECK(t.count(1, 0) == 0);
    CHECK(t.total() == 4);
}

TEST_CASE("contingency counts conserve the observation count") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Dataset d = random_dataset(rng, 4, 30);
        ContingencyTable t = contingency_counts(d, VarId{2}, VarSet{0b1011});
        CHECK(t.total() == 30);
    }
}

TEST_CASE("mdl hand-computed values") {
    MdlScorer mdl;

    // balanced binary child, no parents: H = 4, K = 1
    Dataset plain = make_dataset({{0, 0, 1, 1}});
    CHECK(mdl.local_score(plain, VarId{0}, VarSet{}) == doctest::Approx(5.0).epsilon(1e-12));

    // child identical to its single parent: H = 0, K = 2
    Dataset copied = make_dataset({{0, 1, 0, 1}, {0, 1, 0, 1}});
    CHECK(mdl.local_score(copied, VarId{1}, VarSet{0b01}) == doctest::Approx(2.0).epsilon(1e-12));

    // constant child: zero entropy, zero free parameters
    Dataset constant = make_dataset({{0, 0, 0}});
    CHECK(mdl.local_score(constant, VarId{0}, VarSet{}) == 0.0);
}

TEST_CASE("score is invariant under row permutation") {
    std::mt19937 rng(17);
    MdlScorer mdl;
    for (int trial = 0; trial < 10; ++trial) {
        Dataset d = random_dataset(rng, 3, 40);
        double before = mdl.local_score(d, VarId{0}, VarSet{0b110});

        std::vector<int> perm(static_cast<std::size_t>(d.m));
        for (int i = 0; i < d.m; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Dataset shuffled = d;
        for (int i = 0; i < d.n; ++i)
            for (int row = 0; row < d.m; ++row)
                shuffled.columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)] =
                    d.columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(row)])];

        double after = mdl.local_score(shuffled, VarId{0}, VarSet{0b110});
        CHECK(after == doctest::Approx(before).epsilon(1e-12));
    }
}

TEST_CASE("score is invariant under category relabeling") {
    std::mt19937 rng(19);
    MdlScorer mdl;
    for (int trial = 0; trial < 10; ++trial) {
        Dataset d = random_dataset(rng, 3, 40);
        double before = mdl.local_score(d, VarId{1}, VarSet{0b101});

        Dataset relabeled = d;
        for (int i = 0; i < d.n; ++i) {
            std::vector<std::uint32_t> map(d.arities[static_cast<std::size_t>(i)]);
            for (std::uint32_t c = 0; c < map.size(); ++c) map[c] = c;
            std::shuffle(map.begin(), map.end(), rng);
            for (auto& code : relabeled.columns[static_cast<std::size_t>(i)]) code = map[code];
        }

        double after = mdl.local_score(relabeled, VarId{1}, VarSet{0b101});
        CHECK(after == doctest::Approx(before).epsilon(1e-12));
    }
}

TEST_CASE("entropy and penalty are non-negative and entropy shrinks with parents") {
    std::mt19937 rng(23);
    MdlScorer mdl;
    for (int trial = 0; trial < 20; ++trial) {
        Dataset d = random_dataset(rng, 4, 25);
        // H alone is recoverable by scoring against an m=1 penalty... instead
        // compare score minus penalty directly via a zero-penalty dataset is
        // not possible; check H monotonicity through the definition: the
        // penalty K is identical for fixed parent arities, so compare H as
        // score - K.
        auto entropy_of = [&](VarSet parents, VarId child) {
            double q = 1.0;
            for (VarId p : parents.members()) q *= d.arities[static_cast<std::size_t>(p.value)];
            double k = 0.5 * std::log2(static_cast<double>(d.m)) *
                       (d.arities[static_cast<std::size_t>(child.value)] - 1) * q;
            return mdl.local_score(d, child, parents) - k;
        };
        VarId child{0};
        VarSet small{0b0010};
        VarSet large{0b0110};
        double h_empty = entropy_of(VarSet{}, child);
        double h_small = entropy_of(small, child);
        double h_large = entropy_of(large, child);
        CHECK(h_empty >= -1e-9);
        CHECK(h_small <= h_empty + 1e-9);
        CHECK(h_large <= h_small + 1e-9);
    }
}
