#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bwtcst/alphabet.hpp"
#include "bwtcst/types.hpp"

namespace bwtcst {

enum class DnaVariant {
    dna5,  ///< {#, A, C, G, T}: 128 characters per 512-bit block
    dna6,  ///< {#, A, C, G, N, T}: 117 characters per block, N rank in 3 x 11 spare bits
};

/// Characters of a variant, terminator excluded, in code order.
std::string_view dna_letters(DnaVariant v) noexcept;

/// Smallest variant containing every byte of `text`, if any.
std::optional<DnaVariant> detect_dna_variant(std::span<const std::uint8_t> text,
                                             std::uint8_t terminator = default_terminator);

/// Per-code counts; index 0 is the terminator. Unused slots stay zero.
using DnaCounts = std::array<pos_t, 6>;

/// Cache-line packed DNA string. Each 512-bit block holds the partial ranks
/// of A, C, G, T before the block in four 32-bit counters (128 bits), then
/// three 128-bit bit-planes of the 3-bit character codes. DNA6 keeps 117
/// characters per plane and stores the N rank in the three 11-bit plane
/// tails. Counters are relative to a superblock of at most 2^32 characters
/// whose absolute counts live in a separate table (absent when the string
/// fits in one superblock).
class PackedDnaString {
public:
    struct alignas(64) Block {
        std::uint64_t w[8];
    };

    PackedDnaString() = default;

    /// Throws std::invalid_argument naming the byte offset of the first
    /// character outside the variant's alphabet. `blocks_per_superblock`
    /// overrides the default (the largest count keeping a superblock within
    /// 2^32 characters).
    static PackedDnaString pack(std::span<const std::uint8_t> text, DnaVariant variant,
                                std::uint8_t terminator = default_terminator,
                                std::optional<pos_t> blocks_per_superblock = std::nullopt);

    static constexpr unsigned chars_per_block(DnaVariant v) noexcept {
        return v == DnaVariant::dna5 ? 128 : 117;
    }
    static constexpr unsigned alphabet_size(DnaVariant v) noexcept {
        return v == DnaVariant::dna5 ? 5 : 6;
    }

    pos_t size() const noexcept { return n_; }
    DnaVariant variant() const noexcept { return variant_; }
    unsigned sigma() const noexcept { return alphabet_size(variant_); }
    std::uint8_t terminator_byte() const noexcept { return terminator_; }
    std::span<const Block> blocks() const noexcept { return blocks_; }
    bool has_superblock_table() const noexcept { return !super_.empty(); }

    symbol_t access(pos_t i) const noexcept;
    /// Exclusive-prefix counts of every code at position i (1 <= i <= n+1),
    /// from one block plus the superblock table.
    DnaCounts rank_all(pos_t i) const noexcept;
    pos_t rank(symbol_t c, pos_t i) const noexcept { return rank_all(i)[c]; }
    /// Counts of every code before block b, from the stored counters.
    DnaCounts block_counts(pos_t b) const noexcept;

private:
    unsigned cpb() const noexcept { return chars_per_block(variant_); }

    pos_t n_ = 0;
    DnaVariant variant_ = DnaVariant::dna5;
    std::uint8_t terminator_ = default_terminator;
    pos_t blocks_per_super_ = 0;
    std::vector<Block> blocks_;
    std::vector<std::array<pos_t, 5>> super_;  // absolute A, C, G, T, N before each superblock
};

/// PackedDnaString exposed through the same query surface as BwtSequence.
class DnaBwtSequence {
public:
    DnaBwtSequence() = default;
    explicit DnaBwtSequence(PackedDnaString packed);

    static DnaBwtSequence build(std::span<const std::uint8_t> text, DnaVariant variant,
                                std::uint8_t terminator = default_terminator) {
        return DnaBwtSequence(PackedDnaString::pack(text, variant, terminator));
    }

    const PackedDnaString& packed() const noexcept { return packed_; }
    pos_t size() const noexcept { return packed_.size(); }
    unsigned sigma() const noexcept { return packed_.sigma(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    bool has_terminator() const noexcept { return count(0) > 0; }
    static constexpr symbol_t terminator() noexcept { return 0; }

    symbol_t access(pos_t i) const noexcept { return packed_.access(i); }
    pos_t rank(symbol_t c, pos_t i) const noexcept { return packed_.rank(c, i); }
    pos_t count(symbol_t c) const noexcept { return c_[c + 1] - c_[c]; }
    pos_t c_array(symbol_t c) const noexcept { return c_[c]; }
    pos_t select(symbol_t c, pos_t j) const;

    Interval bwsearch(Interval iv, symbol_t c) const noexcept {
        const pos_t l = c_[c] + rank(c, iv.left);
        const pos_t r = iv.empty() ? l - 1 : c_[c] + rank(c, iv.right + 1) - 1;
        return Interval{l, r};
    }

    std::vector<symbol_t> range_distinct(Interval iv) const;

    template <class Visit>
    void get_intervals(Interval iv, Visit&& visit) const {
        if (iv.empty()) return;
        const DnaCounts a = packed_.rank_all(iv.left);
        const DnaCounts b = packed_.rank_all(iv.right + 1);
        for (symbol_t c = 1; c < sigma(); ++c)
            if (b[c] > a[c]) visit(c, Interval{c_[c] + a[c], c_[c] + b[c] - 1});
    }

    template <class Visit>
    void get_intervals_pair(const DnaBwtSequence& other, Interval iv1, Interval iv2,
                            Visit&& visit) const {
        const DnaCounts a1 = packed_.rank_all(iv1.left);
        const DnaCounts b1 = iv1.empty() ? a1 : packed_.rank_all(iv1.right + 1);
        const DnaCounts a2 = other.packed_.rank_all(iv2.left);
        const DnaCounts b2 = iv2.empty() ? a2 : other.packed_.rank_all(iv2.right + 1);
        for (symbol_t c = 1; c < sigma(); ++c) {
            if (b1[c] == a1[c] && b2[c] == a2[c]) continue;
            const pos_t l1 = c_[c] + a1[c], l2 = other.c_[c] + a2[c];
            visit(c, Interval{l1, l1 + (b1[c] - a1[c]) - 1}, Interval{l2, l2 + (b2[c] - a2[c]) - 1});
        }
    }

    void rank_many(pos_t i, std::span<const symbol_t> chars, std::span<pos_t> out) const noexcept {
        const DnaCounts r = packed_.rank_all(i);
        for (std::size_t k = 0; k < chars.size(); ++k) out[k] = r[chars[k]];
    }

private:
    PackedDnaString packed_;
    Alphabet alphabet_;
    std::vector<pos_t> c_;
};

} // namespace bwtcst
