#include "bwtcst/wavelet.hpp"

#include <stdexcept>
#include <string>

namespace bwtcst {

namespace {

symbol_t reverse_bits(symbol_t x, unsigned width) {
    symbol_t r = 0;
    for (unsigned k = 0; k < width; ++k) {
        r = (r << 1) | (x & 1u);
        x >>= 1;
    }
    return r;
}

} // namespace

BwtSequence BwtSequence::build(std::span<const std::uint8_t> text, std::uint8_t terminator) {
    return build(text, Alphabet::of(text, terminator));
}

BwtSequence BwtSequence::build(std::span<const std::uint8_t> text, const Alphabet& alphabet) {
    if (text.empty()) throw std::invalid_argument("cannot build a sequence from empty input");
    BwtSequence s;
    s.n_ = text.size();
    s.alphabet_ = alphabet;
    const unsigned sigma = alphabet.size();
    unsigned levels = 1;
    while ((symbol_t{1} << levels) < sigma) ++levels;

    std::vector<pos_t> counts(sigma, 0);
    for (pos_t i = 0; i < text.size(); ++i) {
        if (!alphabet.contains(text[i]))
            throw std::invalid_argument("byte at offset " + std::to_string(i) +
                                        " is not in the alphabet");
        ++counts[alphabet.code(text[i])];
    }
    s.c_.assign(sigma + 1, 1);
    for (unsigned c = 0; c < sigma; ++c) s.c_[c + 1] = s.c_[c] + counts[c];

    // Level l orders the symbols stably by their top l bits read in reverse
    // (most recent bit most significant), so every level can be filled
    // directly from the input with one offset per key.
    std::vector<pos_t> offset;
    for (unsigned l = 0; l < levels; ++l) {
        const unsigned nkeys = 1u << l;
        offset.assign(nkeys, 0);
        for (unsigned c = 0; c < sigma; ++c)
            offset[reverse_bits(c >> (levels - l), l)] += counts[c];
        pos_t acc = 0;
        for (auto& o : offset) {
            const pos_t k = o;
            o = acc;
            acc += k;
        }
        BitVec bits(s.n_);
        pos_t zeros = 0;
        for (auto byte : text) {
            const symbol_t c = alphabet.code(byte);
            const pos_t p = offset[reverse_bits(c >> (levels - l), l)]++;
            if ((c >> (levels - 1 - l)) & 1u) bits.set(p + 1); else ++zeros;
        }
        s.levels_.emplace_back(std::move(bits));
        s.zeros_.push_back(zeros);
    }

    s.final_start_.assign(sigma, 0);
    for (unsigned c = 0; c < sigma; ++c) {
        pos_t p = 0;
        for (unsigned l = 0; l < levels; ++l) {
            const RankedBitVec& bv = s.levels_[l];
            p = ((c >> (levels - 1 - l)) & 1u) ? s.zeros_[l] + bv.ones_prefix(p)
                                               : bv.zeros_prefix(p);
        }
        s.final_start_[c] = p;
    }
    return s;
}

symbol_t BwtSequence::access(pos_t i) const noexcept {
    pos_t p = i - 1;
    symbol_t c = 0;
    for (unsigned l = 0; l < levels_.size(); ++l) {
        const RankedBitVec& bv = levels_[l];
        if (bv.get(p + 1)) {
            c = (c << 1) | 1u;
            p = zeros_[l] + bv.ones_prefix(p);
        } else {
            c <<= 1;
            p = bv.zeros_prefix(p);
        }
    }
    return c;
}

pos_t BwtSequence::rank(symbol_t c, pos_t i) const noexcept {
    pos_t p = i - 1;
    const unsigned levels = static_cast<unsigned>(levels_.size());
    for (unsigned l = 0; l < levels; ++l) {
        const RankedBitVec& bv = levels_[l];
        p = ((c >> (levels - 1 - l)) & 1u) ? zeros_[l] + bv.ones_prefix(p) : bv.zeros_prefix(p);
    }
    return p - final_start_[c];
}

pos_t BwtSequence::select(symbol_t c, pos_t j) const {
    if (c >= sigma() || j < 1 || j > count(c))
        throw std::out_of_range("select: ordinal out of range");
    pos_t p = final_start_[c] + j - 1;
    const unsigned levels = static_cast<unsigned>(levels_.size());
    for (unsigned l = levels; l-- > 0;) {
        const RankedBitVec& bv = levels_[l];
        p = ((c >> (levels - 1 - l)) & 1u) ? bv.select1_offset(p - zeros_[l] + 1)
                                           : bv.select0_offset(p + 1);
    }
    return p + 1;
}

std::vector<symbol_t> BwtSequence::range_distinct(Interval iv) const {
    std::vector<symbol_t> out;
    if (iv.empty()) return out;
    descend(0, iv.left - 1, iv.right, 0, [&](symbol_t c, pos_t, pos_t) {
        if (c == terminator() && has_terminator()) return;
        out.push_back(c);
    });
    return out;
}

pos_t BwtSequence::c_array_byte(std::uint8_t c) const noexcept {
    if (alphabet_.contains(c)) return c_[alphabet_.code(c)];
    if (alphabet_.has_terminator() && c == alphabet_.terminator_byte()) return 1;
    // First code whose byte sorts after c; the terminator sorts first.
    for (symbol_t k = 0; k < sigma(); ++k) {
        const std::uint8_t b = alphabet_.byte(k);
        if (alphabet_.has_terminator() && k == terminator()) continue;
        if (b > c) return c_[k];
    }
    return n_ + 1;
}

pos_t BwtSequence::select_byte(std::uint8_t c, pos_t j) const {
    if (!alphabet_.contains(c)) throw std::out_of_range("select: character not in alphabet");
    return select(alphabet_.code(c), j);
}

} // namespace bwtcst
