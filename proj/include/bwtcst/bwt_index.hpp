#pragma once

#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwtcst/types.hpp"

namespace bwtcst {

/// Query surface shared by BwtSequence and DnaBwtSequence. The construction
/// algorithms are written against this concept so they run on either
/// backend.
template <class S>
concept BwtIndex = requires(const S& s, symbol_t c, pos_t i, Interval iv,
                            std::span<const symbol_t> chars, std::span<pos_t> out) {
    { s.size() } -> std::convertible_to<pos_t>;
    { s.sigma() } -> std::convertible_to<unsigned>;
    { s.has_terminator() } -> std::convertible_to<bool>;
    { S::terminator() } -> std::convertible_to<symbol_t>;
    { s.access(i) } -> std::convertible_to<symbol_t>;
    { s.rank(c, i) } -> std::convertible_to<pos_t>;
    { s.count(c) } -> std::convertible_to<pos_t>;
    { s.c_array(c) } -> std::convertible_to<pos_t>;
    { s.select(c, i) } -> std::convertible_to<pos_t>;
    { s.bwsearch(iv, c) } -> std::same_as<Interval>;
    { s.range_distinct(iv) } -> std::same_as<std::vector<symbol_t>>;
    s.rank_many(i, chars, out);
    s.get_intervals(iv, [](symbol_t, Interval) {});
    s.get_intervals_pair(s, iv, iv, [](symbol_t, Interval, Interval) {});
};

/// Range of all suffixes starting with code c.
template <BwtIndex S>
Interval char_range(const S& s, symbol_t c) {
    return Interval{s.c_array(c), s.c_array(c) + s.count(c) - 1};
}

/// Range of the terminator; throws std::invalid_argument when absent.
template <BwtIndex S>
Interval terminator_range(const S& s) {
    if (!s.has_terminator() || s.count(S::terminator()) == 0)
        throw std::invalid_argument("input contains no terminator");
    return char_range(s, S::terminator());
}

/// Empty if s is the BWT of a terminated text or collection (every LF walk
/// from a terminator row reaches a string start and all rows are covered),
/// otherwise a description naming the first offending byte offset.
template <BwtIndex S>
std::string validate_bwt(const S& s) {
    const pos_t n = s.size();
    if (!s.has_terminator() || s.count(S::terminator()) == 0) return "input contains no terminator";
    const Interval tr = char_range(s, S::terminator());
    std::vector<bool> seen(n + 1, false);
    pos_t covered = 0;
    for (pos_t t = tr.left; t <= tr.right; ++t) {
        for (pos_t row = t;;) {
            if (seen[row])
                return "not a valid BWT: LF walk revisits byte offset " + std::to_string(row - 1);
            seen[row] = true;
            ++covered;
            const symbol_t c = s.access(row);
            if (c == S::terminator()) break;
            row = s.c_array(c) + s.rank(c, row);
        }
    }
    if (covered != n) {
        pos_t first = 1;
        while (seen[first]) ++first;
        return "not a valid BWT: byte offset " + std::to_string(first - 1) +
               " is unreachable from the terminators";
    }
    return {};
}

} // namespace bwtcst
