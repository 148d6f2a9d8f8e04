#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bwtcst/alphabet.hpp"
#include "bwtcst/bitvec.hpp"
#include "bwtcst/types.hpp"

namespace bwtcst {

/// A BWT (or any byte sequence) stored as a wavelet matrix over the dense
/// codes of its alphabet. All positions are 1-based; rank is exclusive, i.e.
/// rank(c, i) counts occurrences of c in [1, i-1].
class BwtSequence {
public:
    BwtSequence() = default;

    /// Throws std::invalid_argument on empty input.
    static BwtSequence build(std::span<const std::uint8_t> text,
                             std::uint8_t terminator = default_terminator);
    /// Builds over a given alphabet (e.g. shared by two collections). Throws
    /// std::invalid_argument if a byte is not in the alphabet.
    static BwtSequence build(std::span<const std::uint8_t> text, const Alphabet& alphabet);

    pos_t size() const noexcept { return n_; }
    unsigned sigma() const noexcept { return alphabet_.size(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    bool has_terminator() const noexcept { return alphabet_.has_terminator(); }
    /// Code of the terminator (always 0).
    static constexpr symbol_t terminator() noexcept { return 0; }

    symbol_t access(pos_t i) const noexcept;
    pos_t rank(symbol_t c, pos_t i) const noexcept;
    pos_t count(symbol_t c) const noexcept { return c_[c + 1] - c_[c]; }
    /// 1 + number of symbols smaller than c; c_array(sigma()) == n + 1.
    pos_t c_array(symbol_t c) const noexcept { return c_[c]; }
    /// Position of the j-th occurrence of c. Throws std::out_of_range.
    pos_t select(symbol_t c, pos_t j) const;

    /// Range of cW from range(W); empty input ranges keep the left-bound
    /// invariant.
    Interval bwsearch(Interval iv, symbol_t c) const noexcept {
        const pos_t l = c_[c] + rank(c, iv.left);
        const pos_t r = iv.empty() ? l - 1 : c_[c] + rank(c, iv.right + 1) - 1;
        return Interval{l, r};
    }

    /// Distinct non-terminator codes in s[L, R], ascending.
    std::vector<symbol_t> range_distinct(Interval iv) const;

    /// Calls visit(c, range(cW)) for every non-terminator c in s[L, R], in
    /// ascending code order, without materializing the list.
    template <class Visit>
    void get_intervals(Interval iv, Visit&& visit) const {
        if (iv.empty()) return;
        descend(0, iv.left - 1, iv.right, 0, [&](symbol_t c, pos_t b, pos_t e) {
            if (c == terminator() && has_terminator()) return;
            const pos_t base = c_[c] - final_start_[c];
            visit(c, Interval{base + b, base + e - 1});
        });
    }

    /// Paired left extension over two sequences sharing one alphabet. Calls
    /// visit(c, range1(cW), range2(cW)) for each non-terminator c occurring in
    /// s1[iv1] or s2[iv2]; empty sides carry their left bounds.
    template <class Visit>
    void get_intervals_pair(const BwtSequence& other, Interval iv1, Interval iv2,
                            Visit&& visit) const {
        descend_pair(other, 0, iv1.left - 1, iv1.right, iv2.left - 1, iv2.right, 0, visit);
    }

    /// out[k] = rank(chars[k], i).
    void rank_many(pos_t i, std::span<const symbol_t> chars, std::span<pos_t> out) const noexcept {
        for (std::size_t k = 0; k < chars.size(); ++k) out[k] = rank(chars[k], i);
    }

    // Byte-level conveniences; unknown bytes behave as absent characters.
    std::uint8_t access_byte(pos_t i) const noexcept { return alphabet_.byte(access(i)); }
    pos_t rank_byte(std::uint8_t c, pos_t i) const noexcept {
        return alphabet_.contains(c) ? rank(alphabet_.code(c), i) : 0;
    }
    pos_t c_array_byte(std::uint8_t c) const noexcept;
    pos_t select_byte(std::uint8_t c, pos_t j) const;

    unsigned levels() const noexcept { return static_cast<unsigned>(levels_.size()); }

private:
    template <class Leaf>
    void descend(unsigned level, pos_t b, pos_t e, symbol_t prefix, Leaf&& leaf) const {
        if (b == e) return;
        if (level == levels_.size()) {
            leaf(prefix, b, e);
            return;
        }
        const RankedBitVec& bv = levels_[level];
        const pos_t b0 = bv.zeros_prefix(b), e0 = bv.zeros_prefix(e);
        descend(level + 1, b0, e0, prefix << 1, leaf);
        const pos_t z = zeros_[level];
        descend(level + 1, z + (b - b0), z + (e - e0), (prefix << 1) | 1u, leaf);
    }

    template <class Visit>
    void descend_pair(const BwtSequence& o, unsigned level, pos_t b1, pos_t e1, pos_t b2,
                      pos_t e2, symbol_t prefix, Visit& visit) const {
        if (b1 == e1 && b2 == e2) return;
        if (level == levels_.size()) {
            if (prefix == terminator() && has_terminator()) return;
            const pos_t base1 = c_[prefix] - final_start_[prefix];
            const pos_t base2 = o.c_[prefix] - o.final_start_[prefix];
            visit(prefix, Interval{base1 + b1, base1 + e1 - 1}, Interval{base2 + b2, base2 + e2 - 1});
            return;
        }
        const RankedBitVec& bv1 = levels_[level];
        const RankedBitVec& bv2 = o.levels_[level];
        const pos_t b10 = bv1.zeros_prefix(b1), e10 = bv1.zeros_prefix(e1);
        const pos_t b20 = bv2.zeros_prefix(b2), e20 = bv2.zeros_prefix(e2);
        descend_pair(o, level + 1, b10, e10, b20, e20, prefix << 1, visit);
        const pos_t z1 = zeros_[level], z2 = o.zeros_[level];
        descend_pair(o, level + 1, z1 + (b1 - b10), z1 + (e1 - e10), z2 + (b2 - b20),
                     z2 + (e2 - e20), (prefix << 1) | 1u, visit);
    }

    pos_t n_ = 0;
    Alphabet alphabet_;
    std::vector<RankedBitVec> levels_;
    std::vector<pos_t> zeros_;
    std::vector<pos_t> final_start_;  // 0-based offset of each code's block at the last level
    std::vector<pos_t> c_;            // sigma + 1 entries
};

} // namespace bwtcst
