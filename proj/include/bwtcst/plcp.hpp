#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bwtcst/bitvec.hpp"
#include "bwtcst/bwt_index.hpp"
#include "bwtcst/lcp.hpp"
#include "bwtcst/stree.hpp"
#include "bwtcst/types.hpp"

namespace bwtcst {

/// True iff j == 1 or s[j] != s[j-1].
template <BwtIndex S>
bool is_irreducible(const S& s, pos_t j) {
    return j == 1 || s.access(j) != s.access(j - 1);
}

/// Largest code c with C(c) <= j, i.e. the first character of suffix j.
template <BwtIndex S>
symbol_t f_char(const S& s, pos_t j) {
    symbol_t lo = 0, hi = s.sigma();
    while (hi - lo > 1) {
        const symbol_t mid = (lo + hi) / 2;
        if (s.c_array(mid) <= j) lo = mid; else hi = mid;
    }
    return lo;
}

/// SA position of the text successor of the suffix at j.
template <BwtIndex S>
pos_t psi(const S& s, pos_t j) {
    const symbol_t c = f_char(s, j);
    return s.select(c, j - s.c_array(c) + 1);
}

/// ceil(log2(n)^3), clamped to [1, 65535].
inline pos_t default_small_cap(pos_t n) {
    const double lg = n > 1 ? std::log2(static_cast<double>(n)) : 1.0;
    const double v = std::ceil(lg * lg * lg);
    return std::clamp<pos_t>(static_cast<pos_t>(v), 1, 65535);
}

struct PlcpOptions {
    pos_t block = 0;        ///< SA positions per block; 0 selects the default
    pos_t small_cap = 0;    ///< largest value kept in the 16-bit table; 0 selects the default
    LcpOptions lcp;
};

struct PlcpStats {
    pos_t blocks = 0;
    pos_t lookups = 0;      ///< values read from the block tables
    pos_t derived = 0;      ///< values obtained as predecessor - 1
    pos_t large = 0;        ///< irreducible values above the cap
    pos_t block_size = 0;
    pos_t small_cap = 0;
};

/// PLCP bitvector of length 2n with bit 2i + PLCP[i] set for every i.
/// Requires the BWT of a single text; throws std::invalid_argument otherwise.
template <BwtIndex S>
BitVec build_plcp(const S& s, const PlcpOptions& opt = {}, PlcpStats* stats = nullptr) {
    const pos_t n = s.size();
    const Interval tr = terminator_range(s);
    if (tr.length() != 1) throw std::invalid_argument("PLCP needs a single terminated text");
    const pos_t block = opt.block ? opt.block : default_block_chars(n, s.sigma());
    const pos_t cap = opt.small_cap ? std::min<pos_t>(opt.small_cap, 65535) : default_small_cap(n);
    PlcpStats st;
    st.block_size = block;
    st.small_cap = cap;
    BitVec bits(2 * n);
    const pos_t isa1 = psi(s, tr.left);

    std::vector<std::uint16_t> small;
    std::vector<LcpPair> large;
    for (pos_t b0 = 1; b0 <= n; b0 += block) {
        const pos_t b1 = std::min(n, b0 + block - 1);
        const pos_t len = b1 - b0 + 1;
        ++st.blocks;
        small.assign(len, 0);
        large.clear();
        enumerate_lcp(s, opt.lcp, [&](pos_t j, pos_t v) {
            if (j < b0 || j > b1 || !is_irreducible(s, j)) return;
            if (v <= cap) small[j - b0] = static_cast<std::uint16_t>(v);
            else large.push_back(LcpPair{j, v});
        });
        std::sort(large.begin(), large.end());
        st.large += large.size();
        BitVec marks(len);
        for (const auto& p : large) marks.set(p.pos - b0 + 1);
        const RankedBitVec rmarks(std::move(marks));

        bool active = false;
        pos_t prev = 0;
        pos_t j = isa1;
        for (pos_t i = 1; i <= n; ++i) {
            if (is_irreducible(s, j)) {
                active = j >= b0 && j <= b1;
                if (active) {
                    const pos_t k = j - b0 + 1;
                    prev = rmarks.get(k) ? large[rmarks.rank1(k)].value : small[k - 1];
                    ++st.lookups;
                    bits.set(2 * i + prev);
                }
            } else if (active) {
                --prev;
                ++st.derived;
                bits.set(2 * i + prev);
            }
            if (i < n) j = psi(s, j);
        }
    }
    if (stats) *stats = st;
    return bits;
}

/// PLCP values recovered from the bitvector: PLCP[i] = select1(i) - 2i.
inline std::vector<pos_t> decode_plcp(const BitVec& bits) {
    std::vector<pos_t> out;
    pos_t i = 0;
    for (pos_t p = bits.next_one(1); p != npos; p = bits.next_one(p + 1)) {
        ++i;
        out.push_back(p - 2 * i);
    }
    return out;
}

} // namespace bwtcst
