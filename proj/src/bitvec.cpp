#include "bwtcst/bitvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwtcst {

BitVec::BitVec(pos_t n, bool value)
    : n_(n), words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    if (value && (n & 63)) words_.back() = (std::uint64_t{1} << (n & 63)) - 1;
}

BitVec BitVec::from_string(const std::string& bits) {
    BitVec bv(bits.size());
    for (pos_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            bv.set(i + 1);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return bv;
}

pos_t BitVec::next_one(pos_t p) const noexcept {
    if (p == 0) p = 1;
    if (p > n_) return npos;
    pos_t i = p - 1;
    pos_t w = i >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (word == 0) {
        if (++w == words_.size()) return npos;
        word = words_[w];
    }
    const pos_t found = (w << 6) + static_cast<pos_t>(std::countr_zero(word));
    return found < n_ ? found + 1 : npos;
}

pos_t BitVec::count() const noexcept {
    pos_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

void BitVec::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void BitVec::push_back(bool value) {
    if ((n_ & 63) == 0) words_.push_back(0);
    ++n_;
    if (value) set(n_);
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (pos_t p = 1; p <= n_; ++p)
        if (get(p)) s[p - 1] = '1';
    return s;
}

unsigned select_in_word(std::uint64_t w, unsigned k) noexcept {
    // Byte-wise skip, then bit scan inside the byte.
    unsigned base = 0;
    for (;;) {
        const unsigned c = std::popcount(w & 0xFFu);
        if (k < c) break;
        k -= c;
        w >>= 8;
        base += 8;
    }
    for (;;) {
        if (w & 1u) {
            if (k == 0) return base;
            --k;
        }
        w >>= 1;
        ++base;
    }
}

RankedBitVec::RankedBitVec(BitVec bits) : bits_(std::move(bits)) {
    const auto w = bits_.words();
    super_.assign(w.size() / 8 + 1, 0);
    pos_t acc = 0;
    for (pos_t k = 0; k < w.size(); ++k) {
        if ((k & 7) == 0) super_[k >> 3] = acc;
        acc += std::popcount(w[k]);
    }
    if ((w.size() & 7) == 0) super_[w.size() >> 3] = acc;
    ones_ = acc;
}

pos_t RankedBitVec::rank1(pos_t i) const {
    if (i < 1 || i > size() + 1) throw std::out_of_range("rank1: position out of range");
    return ones_prefix(i - 1);
}

pos_t RankedBitVec::rank0(pos_t i) const {
    if (i < 1 || i > size() + 1) throw std::out_of_range("rank0: position out of range");
    return zeros_prefix(i - 1);
}

pos_t RankedBitVec::select1(pos_t j) const {
    if (j < 1 || j > ones_) throw std::out_of_range("select1: ordinal exceeds popcount");
    return select1_offset(j) + 1;
}

pos_t RankedBitVec::select0(pos_t j) const {
    if (j < 1 || j > size() - ones_) throw std::out_of_range("select0: ordinal exceeds zero count");
    return select0_offset(j) + 1;
}

pos_t RankedBitVec::select1_offset(pos_t j) const noexcept {
    // Last superblock whose absolute count is < j.
    const auto it = std::lower_bound(super_.begin(), super_.end(), j);
    pos_t sb = static_cast<pos_t>(it - super_.begin()) - 1;
    pos_t remaining = j - super_[sb];
    const auto w = bits_.words();
    for (pos_t k = sb * 8;; ++k) {
        const pos_t c = std::popcount(w[k]);
        if (remaining <= c)
            return (k << 6) + select_in_word(w[k], static_cast<unsigned>(remaining - 1));
        remaining -= c;
    }
}

pos_t RankedBitVec::select0_offset(pos_t j) const noexcept {
    // Zeros before superblock s: 512*s - super_[s].
    pos_t lo = 0, hi = super_.size();
    while (hi - lo > 1) {
        const pos_t mid = (lo + hi) / 2;
        if (mid * 512 - super_[mid] < j) lo = mid; else hi = mid;
    }
    pos_t remaining = j - (lo * 512 - super_[lo]);
    const auto w = bits_.words();
    for (pos_t k = lo * 8;; ++k) {
        const pos_t c = 64 - std::popcount(w[k]);
        if (remaining <= c)
            return (k << 6) + select_in_word(~w[k], static_cast<unsigned>(remaining - 1));
        remaining -= c;
    }
}

} // namespace bwtcst
