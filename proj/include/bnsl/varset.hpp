#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bnsl/errors.hpp"

namespace bnsl {

/// Index of a variable, 0-based, stable for the lifetime of one problem.
struct VarId {
    int value = 0;

    friend constexpr bool operator==(VarId a, VarId b) { return a.value == b.value; }
    friend constexpr bool operator!=(VarId a, VarId b) { return a.value != b.value; }
    friend constexpr bool operator<(VarId a, VarId b) { return a.value < b.value; }
};

/// Subset of variables encoded as a 64-bit mask, bit i set iff variable i
/// is a member. The problem size n is carried by the surrounding context,
/// not by the value; all operations are O(1) bit arithmetic.
class VarSet {
public:
    constexpr VarSet() = default;
    explicit constexpr VarSet(std::uint64_t bits) : bits_(bits) {}

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(VarId v) const { return (bits_ >> v.value) & 1u; }
    constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr VarSet with(VarId v) const { return VarSet(bits_ | (std::uint64_t{1} << v.value)); }
    constexpr VarSet without(VarId v) const { return VarSet(bits_ & ~(std::uint64_t{1} << v.value)); }

    /// Complement relative to the n-variable universe.
    VarSet complement(int n) const;

    /// Members in ascending VarId order.
    std::vector<VarId> members() const;

    /// Lowercase hexadecimal rendering of the mask, e.g. {0,2} -> "5".
    std::string to_hex() const;
    static VarSet from_hex(const std::string& text);

    friend constexpr bool operator==(VarSet a, VarSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VarSet a, VarSet b) { return a.bits_ != b.bits_; }
    friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }
    friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }

private:
    std::uint64_t bits_ = 0;
};

/// Maximum number of variables representable in one machine word.
inline constexpr int kMaxVars = 64;

/// The set {0, ..., n-1}. Throws CapacityError unless 1 <= n <= 64.
inline VarSet full_set(int n) {
    if (n < 1 || n > kMaxVars)
        throw CapacityError("variable count must be in [1, 64], got " + std::to_string(n));
    return VarSet(n == kMaxVars ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

inline VarSet VarSet::complement(int n) const { return VarSet(full_set(n).bits() & ~bits_); }

inline std::vector<VarId> VarSet::members() const {
    std::vector<VarId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(VarId{std::countr_zero(b)});
    return out;
}

inline std::string VarSet::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    if (bits_ == 0) return "0";
    std::string out;
    for (std::uint64_t b = bits_; b != 0; b >>= 4)
        out.insert(out.begin(), digits[b & 0xf]);
    return out;
}

inline VarSet VarSet::from_hex(const std::string& text) {
    if (text.empty() || text.size() > 16)
        throw ParseError("bad set literal '" + text + "'");
    std::uint64_t bits = 0;
    for (char c : text) {
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else throw ParseError("bad set literal '" + text + "'");
        bits = (bits << 4) | static_cast<std::uint64_t>(digit);
    }
    return VarSet(bits);
}

} // namespace bnsl
