#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bwtcst/dnapack.hpp"
#include "bwtcst/lcp.hpp"
#include "bwtcst/wavelet.hpp"
#include "support.hpp"

using namespace bwtcst;
using testing::bytes;

static_assert(BwtIndex<DnaBwtSequence>);
static_assert(sizeof(PackedDnaString::Block) == 64 && alignof(PackedDnaString::Block) == 64);

namespace {

std::string random_dna(std::mt19937_64& rng, std::size_t n, DnaVariant v, bool with_term) {
    std::string alpha(dna_letters(v));
    if (with_term) alpha += '#';
    return testing::random_body(rng, n, alpha);
}

void check_against_scan(const std::string& t, DnaVariant v, std::optional<pos_t> bps = std::nullopt) {
    const PackedDnaString p = PackedDnaString::pack(bytes(t), v, '#', bps);
    const std::string letters = "#" + std::string(dna_letters(v));
    DnaCounts cnt{};
    for (pos_t i = 1; i <= t.size() + 1; ++i) {
        REQUIRE(p.rank_all(i) == cnt);
        if (i > t.size()) break;
        const auto c = static_cast<symbol_t>(letters.find(t[i - 1]));
        REQUIRE(p.access(i) == c);
        ++cnt[c];
    }
    const unsigned cpb = PackedDnaString::chars_per_block(v);
    DnaCounts acc{};
    for (pos_t b = 0; b < p.blocks().size(); ++b) {
        REQUIRE(p.block_counts(b) == acc);
        for (pos_t i = b * cpb; i < std::min<pos_t>((b + 1) * cpb, t.size()); ++i)
            ++acc[letters.find(t[i])];
    }
}

} // namespace

TEST_CASE("layout constants") {
    CHECK(PackedDnaString::chars_per_block(DnaVariant::dna5) == 128);
    CHECK(PackedDnaString::chars_per_block(DnaVariant::dna6) == 117);
    CHECK(dna_letters(DnaVariant::dna5) == "ACGT");
    CHECK(dna_letters(DnaVariant::dna6) == "ACGNT");
}

TEST_CASE("small DNA5 and DNA6 strings") {
    const auto p5 = PackedDnaString::pack(bytes("ACGT#"), DnaVariant::dna5);
    CHECK(p5.size() == 5);
    CHECK(p5.blocks().size() == 1);
    CHECK(p5.rank_all(1) == DnaCounts{0, 0, 0, 0, 0, 0});
    CHECK(p5.rank_all(5) == DnaCounts{0, 1, 1, 1, 1, 0});
    CHECK(p5.rank_all(6) == DnaCounts{1, 1, 1, 1, 1, 0});
    CHECK_FALSE(p5.has_superblock_table());

    const auto p6 = PackedDnaString::pack(bytes("ACGNT#"), DnaVariant::dna6);
    CHECK(p6.size() == 6);
    CHECK(p6.blocks().size() == 1);
    CHECK(p6.rank_all(7)[4] == 1);
    CHECK(p6.rank_all(7) == DnaCounts{1, 1, 1, 1, 1, 1});
}

TEST_CASE("foreign byte is reported with its offset") {
    try {
        PackedDnaString::pack(bytes("ACGNT#"), DnaVariant::dna5);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
    }
}

TEST_CASE("variant detection") {
    CHECK(detect_dna_variant(bytes("ACGT#")) == DnaVariant::dna5);
    CHECK(detect_dna_variant(bytes("ACGTN#")) == DnaVariant::dna6);
    CHECK(detect_dna_variant(bytes("ACGU#")) == std::nullopt);
    CHECK(detect_dna_variant(bytes("acgt#")) == std::nullopt);
}

TEST_CASE("rank_all matches a scan on random strings") {
    std::mt19937_64 rng(1);
    for (DnaVariant v : {DnaVariant::dna5, DnaVariant::dna6}) {
        for (std::size_t n : {std::size_t{1}, std::size_t{116}, std::size_t{117}, std::size_t{118},
                              std::size_t{127}, std::size_t{128}, std::size_t{129}, std::size_t{1000},
                              std::size_t{100000}}) {
            check_against_scan(random_dna(rng, n, v, true), v);
        }
    }
}

TEST_CASE("superblock table keeps counts absolute") {
    std::mt19937_64 rng(2);
    for (DnaVariant v : {DnaVariant::dna5, DnaVariant::dna6}) {
        for (pos_t per : {pos_t{1}, pos_t{3}}) {
            const std::string t = random_dna(rng, 5000, v, true);
            const auto p = PackedDnaString::pack(bytes(t), v, '#', per);
            CHECK(p.has_superblock_table());
            check_against_scan(t, v, per);
        }
    }
}

TEST_CASE("adapter agrees with the wavelet backend") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        const DnaVariant v = round % 2 ? DnaVariant::dna6 : DnaVariant::dna5;
        const std::string t = testing::random_text(rng, 2 + rng() % 3000, std::string(dna_letters(v)));
        const auto bwt = testing::concat_bwt({t});
        const DnaBwtSequence d = DnaBwtSequence::build(bytes(bwt), v);
        // Wavelet over the full variant alphabet so codes coincide.
        const BwtSequence w = BwtSequence::build(bytes(bwt), d.alphabet());
        REQUIRE(d.sigma() == w.sigma());
        const pos_t n = bwt.size();
        for (symbol_t c = 0; c <= d.sigma(); ++c) REQUIRE(d.c_array(c) == w.c_array(c));
        for (pos_t i = 1; i <= n + 1; i += 1 + rng() % 5)
            for (symbol_t c = 0; c < d.sigma(); ++c) REQUIRE(d.rank(c, i) == w.rank(c, i));
        for (symbol_t c = 0; c < d.sigma(); ++c)
            for (pos_t j = 1; j <= d.count(c); j += 1 + rng() % 7) REQUIRE(d.select(c, j) == w.select(c, j));
        pos_t l = 1 + rng() % n, r = 1 + rng() % n;
        if (l > r) std::swap(l, r);
        REQUIRE(d.range_distinct({l, r}) == w.range_distinct({l, r}));
        REQUIRE(build_lcp(d, 4) == build_lcp(w, 4));
    }
}
