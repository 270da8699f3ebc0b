#include <doctest.h>

#include <random>

#include "bnsl/varset.hpp"

using namespace bnsl;

namespace {

// membership-loop reference for subset checking
bool subset_reference(VarSet a, VarSet b, int n) {
    for (int i = 0; i < n; ++i)
        if (a.contains(VarId{i}) && !b.contains(VarId{i})) return false;
    return true;
}

} // namespace

TEST_CASE("full_set covers exactly the first n variables") {
    CHECK(full_set(4).bits() == 0b1111);
    CHECK(full_set(1).bits() == 0b1);
    CHECK(full_set(64).bits() == ~std::uint64_t{0});
    CHECK_THROWS_AS(full_set(0), CapacityError);
    CHECK_THROWS_AS(full_set(65), CapacityError);
}

TEST_CASE("subset checks") {
    VarSet empty;
    CHECK(empty.subset_of(VarSet{0b10}));
    CHECK_FALSE(VarSet{0b1010}.subset_of(VarSet{0b10}));
    CHECK(VarSet{0b1000}.subset_of(VarSet{0b1100}));
}

TEST_CASE("set algebra basics") {
    CHECK(VarSet{0b001}.complement(3) == VarSet{0b110});
    CHECK(VarSet{}.size() == 0);
    CHECK(VarSet{0b10}.with(VarId{1}) == VarSet{0b10}); // idempotent insert
    CHECK(VarSet{0b1010}.without(VarId{1}) == VarSet{0b1000});
    CHECK(VarSet{0b101}.contains(VarId{2}));
    CHECK_FALSE(VarSet{0b101}.contains(VarId{1}));

    auto ids = VarSet{0b1001}.members();
    REQUIRE(ids.size() == 2);
    CHECK(ids[0] == VarId{0});
    CHECK(ids[1] == VarId{3});
}

TEST_CASE("hex rendering round-trips") {
    CHECK(VarSet{0b101}.to_hex() == "5");
    CHECK(VarSet{}.to_hex() == "0");
    CHECK(VarSet{0xdeadbeef}.to_hex() == "deadbeef");
    CHECK(VarSet::from_hex("deadbeef") == VarSet{0xdeadbeef});
    CHECK_THROWS_AS(VarSet::from_hex(""), ParseError);
    CHECK_THROWS_AS(VarSet::from_hex("xyz"), ParseError);
    CHECK_THROWS_AS(VarSet::from_hex("12345678901234567"), ParseError);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        VarSet s{rng()};
        CHECK(VarSet::from_hex(s.to_hex()) == s);
    }
}

TEST_CASE("subset implies smaller cardinality") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        VarSet b{rng()};
        VarSet a{b.bits() & rng()}; // random subset of b
        CHECK(a.subset_of(b));
        CHECK(a.size() <= b.size());
    }
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(13);
    for (int n : {1, 3, 17, 64}) {
        for (int trial = 0; trial < 100; ++trial) {
            VarSet s{rng() & full_set(n).bits()};
            CHECK(s.complement(n).complement(n) == s);
        }
    }
}

TEST_CASE("subset_of agrees with the membership loop exhaustively at n=10") {
    const int n = 10;
    std::uint64_t mismatches = 0;
    for (std::uint64_t a = 0; a < (1u << n); ++a)
        for (std::uint64_t b = 0; b < (1u << n); ++b)
            if (VarSet{a}.subset_of(VarSet{b}) != subset_reference(VarSet{a}, VarSet{b}, n))
                ++mismatches;
    CHECK(mismatches == 0);
}
