#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bwtcst/types.hpp"

namespace bwtcst {

/// Mutable word-packed bit sequence, positions 1..n.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(pos_t n, bool value = false);

    /// Builds from a string of '0'/'1' characters (test convenience).
    static BitVec from_string(const std::string& bits);

    pos_t size() const noexcept { return n_; }

    bool get(pos_t p) const noexcept {
        const pos_t i = p - 1;
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(pos_t p) noexcept {
        const pos_t i = p - 1;
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(pos_t p) noexcept {
        const pos_t i = p - 1;
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void assign(pos_t p, bool value) noexcept { value ? set(p) : reset(p); }

    /// Smallest set position >= p, or npos. Successive calls with
    /// non-decreasing p scan every word at most once.
    pos_t next_one(pos_t p) const noexcept;

    pos_t count() const noexcept;
    void clear() noexcept;
    void push_back(bool value);

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::string to_string() const;

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    pos_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable bitvector with rank/select support. One absolute counter per
/// 512-bit superblock; word-level popcounts inside the superblock.
class RankedBitVec {
public:
    RankedBitVec() = default;
    explicit RankedBitVec(BitVec bits);

    pos_t size() const noexcept { return bits_.size(); }
    bool get(pos_t p) const noexcept { return bits_.get(p); }
    const BitVec& bits() const noexcept { return bits_; }

    /// Number of set bits in [1, i-1]. Requires 1 <= i <= n+1.
    pos_t rank1(pos_t i) const;
    pos_t rank0(pos_t i) const;
    /// Position of the j-th set (resp. unset) bit. Requires 1 <= j <= count.
    pos_t select1(pos_t j) const;
    pos_t select0(pos_t j) const;

    pos_t ones() const noexcept { return ones_; }

    /// Unchecked: set bits among the first `len` bits.
    pos_t ones_prefix(pos_t len) const noexcept {
        const auto w = bits_.words();
        const pos_t word = len >> 6;
        pos_t r = super_[word >> 3];
        for (pos_t k = word & ~pos_t{7}; k < word; ++k) r += std::popcount(w[k]);
        if (len & 63) r += std::popcount(w[word] & ((std::uint64_t{1} << (len & 63)) - 1));
        return r;
    }
    pos_t zeros_prefix(pos_t len) const noexcept { return len - ones_prefix(len); }

    /// Unchecked 0-based select, returning the 0-based offset of the j-th
    /// (1-based) set or unset bit.
    pos_t select1_offset(pos_t j) const noexcept;
    pos_t select0_offset(pos_t j) const noexcept;

private:
    BitVec bits_;
    std::vector<pos_t> super_;
    pos_t ones_ = 0;
};

/// Position (0-based) of the k-th (0-based) set bit of a word.
unsigned select_in_word(std::uint64_t w, unsigned k) noexcept;

} // namespace bwtcst
