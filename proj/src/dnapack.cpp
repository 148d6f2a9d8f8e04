#include "bwtcst/dnapack.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace bwtcst {

namespace {

constexpr std::string_view dna5_letters = "ACGT";
constexpr std::string_view dna6_letters = "ACGNT";

inline unsigned pop(std::uint64_t x) { return static_cast<unsigned>(std::popcount(x)); }

} // namespace

std::string_view dna_letters(DnaVariant v) noexcept {
    return v == DnaVariant::dna5 ? dna5_letters : dna6_letters;
}

std::optional<DnaVariant> detect_dna_variant(std::span<const std::uint8_t> text,
                                             std::uint8_t terminator) {
    std::array<bool, 256> present{};
    for (auto c : text) present[c] = true;
    bool dna5 = true, dna6 = true;
    for (unsigned b = 0; b < 256; ++b) {
        if (!present[b] || b == terminator) continue;
        if (dna5_letters.find(static_cast<char>(b)) == std::string_view::npos) dna5 = false;
        if (dna6_letters.find(static_cast<char>(b)) == std::string_view::npos) dna6 = false;
    }
    if (dna5) return DnaVariant::dna5;
    if (dna6) return DnaVariant::dna6;
    return std::nullopt;
}

PackedDnaString PackedDnaString::pack(std::span<const std::uint8_t> text, DnaVariant variant,
                                      std::uint8_t terminator,
                                      std::optional<pos_t> blocks_per_superblock) {
    PackedDnaString s;
    s.n_ = text.size();
    s.variant_ = variant;
    s.terminator_ = terminator;
    const unsigned cpb = chars_per_block(variant);
    s.blocks_per_super_ = blocks_per_superblock.value_or((pos_t{1} << 32) / cpb);
    if (s.blocks_per_super_ == 0) throw std::invalid_argument("superblock must hold a block");

    std::array<std::int8_t, 256> code;
    code.fill(-1);
    code[terminator] = 0;
    const auto letters = dna_letters(variant);
    for (std::size_t k = 0; k < letters.size(); ++k)
        code[static_cast<std::uint8_t>(letters[k])] = static_cast<std::int8_t>(k + 1);

    const pos_t nblocks = s.n_ / cpb + 1;
    const bool with_table = nblocks > s.blocks_per_super_;
    s.blocks_.assign(nblocks, Block{});
    // Running absolute counts of A, C, G, T, N (DNA6 N is code 4, T code 5).
    std::array<pos_t, 5> abs{}, super_start{};
    const symbol_t n_code = variant == DnaVariant::dna6 ? 4 : 0;
    auto letter_slot = [&](symbol_t c) -> int {
        if (c == 0) return -1;
        if (variant == DnaVariant::dna5) return static_cast<int>(c - 1);  // A C G T
        if (c == n_code) return 4;
        return c == 5 ? 3 : static_cast<int>(c - 1);                      // A C G . T
    };

    for (pos_t b = 0; b < nblocks; ++b) {
        if (b % s.blocks_per_super_ == 0) {
            super_start = abs;
            if (with_table) s.super_.push_back(abs);
        }
        Block& blk = s.blocks_[b];
        std::array<pos_t, 5> rel;
        for (int k = 0; k < 5; ++k) rel[k] = abs[k] - super_start[k];
        blk.w[0] = rel[0] | (rel[1] << 32);
        blk.w[1] = rel[2] | (rel[3] << 32);
        if (variant == DnaVariant::dna6) {
            for (unsigned k = 0; k < 3; ++k)
                blk.w[3 + 2 * k] |= ((rel[4] >> (11 * k)) & 0x7FFu) << 53;
        }
        const pos_t start = b * cpb;
        const pos_t end = std::min<pos_t>(start + cpb, s.n_);
        for (pos_t i = start; i < end; ++i) {
            const int c = code[text[i]];
            if (c < 0) {
                throw std::invalid_argument("byte 0x" + [&] {
                    constexpr char hex[] = "0123456789abcdef";
                    return std::string{hex[text[i] >> 4], hex[text[i] & 15]};
                }() + " at offset " + std::to_string(i) + " is outside the " +
                                            (variant == DnaVariant::dna5 ? "DNA5" : "DNA6") +
                                            " alphabet");
            }
            const unsigned o = static_cast<unsigned>(i - start);
            for (unsigned k = 0; k < 3; ++k) {
                if ((c >> k) & 1)
                    blk.w[2 + 2 * k + (o >> 6)] |= std::uint64_t{1} << (o & 63);
            }
            const int slot = letter_slot(static_cast<symbol_t>(c));
            if (slot >= 0) ++abs[slot];
        }
    }
    return s;
}

symbol_t PackedDnaString::access(pos_t i) const noexcept {
    const pos_t p = i - 1;
    const Block& blk = blocks_[p / cpb()];
    const unsigned o = static_cast<unsigned>(p % cpb());
    symbol_t c = 0;
    for (unsigned k = 0; k < 3; ++k)
        c |= static_cast<symbol_t>((blk.w[2 + 2 * k + (o >> 6)] >> (o & 63)) & 1u) << k;
    return c;
}

DnaCounts PackedDnaString::block_counts(pos_t b) const noexcept {
    const Block& blk = blocks_[b];
    std::array<pos_t, 5> r{blk.w[0] & 0xFFFFFFFFu, blk.w[0] >> 32, blk.w[1] & 0xFFFFFFFFu,
                           blk.w[1] >> 32, 0};
    if (variant_ == DnaVariant::dna6) {
        for (unsigned k = 0; k < 3; ++k) r[4] |= ((blk.w[3 + 2 * k] >> 53) & 0x7FFu) << (11 * k);
    }
    if (!super_.empty()) {
        const auto& sup = super_[b / blocks_per_super_];
        for (int k = 0; k < 5; ++k) r[k] += sup[k];
    }
    DnaCounts out{};
    if (variant_ == DnaVariant::dna5) {
        out = {0, r[0], r[1], r[2], r[3], 0};
    } else {
        out = {0, r[0], r[1], r[2], r[4], r[3]};
    }
    out[0] = b * cpb() - (r[0] + r[1] + r[2] + r[3] + r[4]);
    return out;
}

DnaCounts PackedDnaString::rank_all(pos_t i) const noexcept {
    const pos_t p = i - 1;
    const pos_t b = p / cpb();
    const unsigned o = static_cast<unsigned>(p % cpb());
    DnaCounts out = block_counts(b);
    if (o == 0) return out;
    const Block& blk = blocks_[b];
    const std::uint64_t mlo = o >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << o) - 1;
    const std::uint64_t mhi = o > 64 ? (std::uint64_t{1} << (o - 64)) - 1 : 0;
    const std::uint64_t l0 = blk.w[2] & mlo, h0 = blk.w[3] & mhi;
    const std::uint64_t l1 = blk.w[4] & mlo, h1 = blk.w[5] & mhi;
    const std::uint64_t l2 = blk.w[6] & mlo, h2 = blk.w[7] & mhi;
    // Codes 5..7 never occur in DNA5 and 6..7 never occur in DNA6, which lets
    // most counts skip one plane.
    const unsigned g = pop(l0 & l1) + pop(h0 & h1);
    const unsigned c = pop(l1 & ~l0) + pop(h1 & ~h0);
    unsigned a, t, nn = 0;
    if (variant_ == DnaVariant::dna5) {
        a = pop(l0 & ~l1) + pop(h0 & ~h1);
        t = pop(l2) + pop(h2);
        out[1] += a;
        out[2] += c;
        out[3] += g;
        out[4] += t;
    } else {
        a = pop(l0 & ~l1 & ~l2) + pop(h0 & ~h1 & ~h2);
        t = pop(l2 & l0) + pop(h2 & h0);
        nn = pop(l2 & ~l0) + pop(h2 & ~h0);
        out[1] += a;
        out[2] += c;
        out[3] += g;
        out[4] += nn;
        out[5] += t;
    }
    out[0] += o - (a + c + g + t + nn);
    return out;
}

DnaBwtSequence::DnaBwtSequence(PackedDnaString packed) : packed_(std::move(packed)) {
    const auto letters = dna_letters(packed_.variant());
    alphabet_ = Alphabet::from_bytes(
        std::span(reinterpret_cast<const std::uint8_t*>(letters.data()), letters.size()),
        packed_.terminator_byte());
    const DnaCounts total = packed_.rank_all(packed_.size() + 1);
    c_.assign(sigma() + 1, 1);
    for (unsigned c = 0; c < sigma(); ++c) c_[c + 1] = c_[c] + total[c];
}

pos_t DnaBwtSequence::select(symbol_t c, pos_t j) const {
    if (c >= sigma() || j < 1 || j > count(c))
        throw std::out_of_range("select: ordinal out of range");
    const auto nblocks = static_cast<pos_t>(packed_.blocks().size());
    pos_t lo = 0, hi = nblocks;
    while (hi - lo > 1) {
        const pos_t mid = (lo + hi) / 2;
        if (packed_.block_counts(mid)[c] < j) lo = mid; else hi = mid;
    }
    pos_t seen = packed_.block_counts(lo)[c];
    const pos_t cpb = PackedDnaString::chars_per_block(packed_.variant());
    for (pos_t i = lo * cpb + 1;; ++i) {
        if (packed_.access(i) == c && ++seen == j) return i;
    }
}

std::vector<symbol_t> DnaBwtSequence::range_distinct(Interval iv) const {
    std::vector<symbol_t> out;
    get_intervals(iv, [&](symbol_t c, Interval) { out.push_back(c); });
    return out;
}

} // namespace bwtcst
