#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "bwtcst/alphabet.hpp"
#include "bwtcst/bitvec.hpp"
#include "bwtcst/types.hpp"

/// Brute-force references built directly from the definitions. Quadratic
/// or worse; intended for inputs of a few thousand characters.
namespace bwtcst::oracle {

/// A suffix of string `string` starting at `offset` (both 0-based).
struct Suffix {
    std::size_t string = 0;
    std::size_t offset = 0;

    friend bool operator==(const Suffix&, const Suffix&) = default;
};

struct NaiveIndex {
    std::vector<std::string> strings;
    std::uint8_t terminator = default_terminator;
    std::vector<Suffix> gsa;            ///< sorted suffixes, ties by string index
    std::vector<pos_t> lcp;             ///< lcp[i-1] = LCP[i]; LCP[1] = 0
    std::vector<bool> equal_prev;       ///< suffix i has the same content as suffix i-1
    std::string bwt;
    /// Single text only: sa[j-1] = SA[j] and isa[i-1] = ISA[i], 1-based.
    std::vector<pos_t> sa;
    std::vector<pos_t> isa;

    pos_t size() const noexcept { return gsa.size(); }
    std::string suffix(pos_t j) const;  ///< content of the j-th smallest suffix
};

/// Throws std::invalid_argument unless every string is non-empty, ends with
/// the terminator and contains it nowhere else.
NaiveIndex naive_build(const std::vector<std::string>& strings,
                       std::uint8_t terminator = default_terminator);
inline NaiveIndex naive_build(std::string_view text, std::uint8_t terminator = default_terminator) {
    return naive_build(std::vector<std::string>{std::string(text)}, terminator);
}
inline NaiveIndex naive_build(std::initializer_list<std::string> strings,
                              std::uint8_t terminator = default_terminator) {
    return naive_build(std::vector<std::string>(strings), terminator);
}

struct RightMaximal {
    std::string w;
    Interval range;
    std::vector<pos_t> child_starts;  ///< first position of each child, ascending

    friend bool operator==(const RightMaximal&, const RightMaximal&) = default;
};

/// Every right-maximal substring (and the empty string), sorted by range
/// then length.
std::vector<RightMaximal> naive_right_maximal(const NaiveIndex& idx);

struct NaiveLeaf {
    Interval range;
    pos_t depth = 0;

    friend bool operator==(const NaiveLeaf&, const NaiveLeaf&) = default;
    friend auto operator<=>(const NaiveLeaf&, const NaiveLeaf&) = default;
};

/// Maximal runs of equal suffixes W#, with |W|, by range.
std::vector<NaiveLeaf> naive_leaves(const NaiveIndex& idx);

/// Positions i >= 2 whose suffix differs from its predecessor.
std::vector<LcpPair> node_type_pairs(const NaiveIndex& idx);
/// The remaining positions.
std::vector<LcpPair> leaf_type_pairs(const NaiveIndex& idx);

/// Suffix-tree DFS, children in lexicographic order, as '(' / ')' text.
std::string naive_bps(const NaiveIndex& idx, bool internal_only = false);

/// PLCP values in text order (single text).
std::vector<pos_t> naive_plcp(const NaiveIndex& idx);
/// Bitvector of length 2n with bit 2i + PLCP[i] set.
BitVec naive_plcp_bits(const NaiveIndex& idx);

/// Index of the union of two collections, first collection first.
NaiveIndex naive_union(const NaiveIndex& a, const NaiveIndex& b);
/// Document array of the union of two collections.
BitVec naive_da(const NaiveIndex& a, const NaiveIndex& b);

/// Inverts the BWT of a single text by LF walks.
std::string naive_invert(std::string_view bwt, std::uint8_t terminator = default_terminator);

/// Converts a '('/')' string to bits (1 = open) and back.
BitVec parens_to_bits(std::string_view parens);
std::string bits_to_parens(const BitVec& bits);

} // namespace bwtcst::oracle
