#pragma once

#include <cstdint>
#include <limits>

namespace bwtcst {

/// Positions and counts. Suffix-array positions are 1-based throughout.
using pos_t = std::uint64_t;
/// Dense alphabet code; the terminator, when present, is code 0.
using symbol_t = std::uint32_t;

inline constexpr pos_t npos = std::numeric_limits<pos_t>::max();

/// Suffix-array range <left, right>, 1-based and inclusive. Empty iff
/// right == left - 1; an empty range still keeps left - 1 equal to the
/// number of suffixes smaller than the string it stands for.
struct Interval {
    pos_t left = 1;
    pos_t right = 0;

    constexpr bool empty() const noexcept { return right + 1 == left; }
    constexpr pos_t length() const noexcept { return right + 1 - left; }
    constexpr bool contains(pos_t p) const noexcept { return p >= left && p <= right; }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

/// A pair (i, LCP[i]).
struct LcpPair {
    pos_t pos = 0;
    pos_t value = 0;

    friend constexpr bool operator==(const LcpPair&, const LcpPair&) = default;
    friend constexpr auto operator<=>(const LcpPair&, const LcpPair&) = default;
};

/// floor(log2(x)) for x >= 1, 0 for x == 0.
constexpr unsigned floor_log2(std::uint64_t x) noexcept {
    unsigned r = 0;
    while (x >>= 1) ++r;
    return r;
}

} // namespace bwtcst
