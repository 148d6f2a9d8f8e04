#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bwtcst/dnapack.hpp"
#include "bwtcst/enumerate.hpp"
#include "bwtcst/oracle.hpp"
#include "support.hpp"

using namespace bwtcst;
using testing::seq;

namespace {

std::vector<NodeRepr> weiner_nodes(const BwtSequence& s, TraversalStats* st = nullptr) {
    std::vector<NodeRepr> out;
    const auto stats = visit_weiner_tree(s, [&](const NodeView& v) { out.push_back(v.to_repr()); });
    if (st) *st = stats;
    return testing::sorted(out);
}

std::vector<NodeRepr> oracle_nodes(const oracle::NaiveIndex& idx) {
    std::vector<NodeRepr> out;
    for (const auto& rm : oracle::naive_right_maximal(idx)) {
        NodeRepr r{rm.child_starts, rm.w.size()};
        r.first.push_back(rm.range.right + 1);
        out.push_back(r);
    }
    return testing::sorted(out);
}

std::vector<LeafItem> leaves(const BwtSequence& s, LeafOptions opt) {
    std::vector<LeafItem> out;
    visit_leaves(s, opt, [&](const LeafItem& l) { out.push_back(l); });
    return testing::sorted(out);
}

std::vector<LeafItem> oracle_leaves(const oracle::NaiveIndex& idx) {
    std::vector<LeafItem> out;
    for (const auto& l : oracle::naive_leaves(idx)) out.push_back(LeafItem{l.range, l.depth});
    return testing::sorted(out);
}

} // namespace

TEST_CASE("root representation") {
    CHECK(root_repr(seq("annb#aa")).first == std::vector<pos_t>{1, 2, 5, 6, 8});
    CHECK(root_repr(seq("#")).first == std::vector<pos_t>{1, 2});
    const NodeRepr r = root_repr(seq("annb#aa"));
    CHECK(r.first.back() - r.first.front() == 7);
    CHECK(r.depth == 0);
}

TEST_CASE("weiner links of banana nodes") {
    const BwtSequence s = seq("annb#aa");
    const symbol_t a = s.alphabet().code('a'), b = s.alphabet().code('b'), n = s.alphabet().code('n');
    const auto links = weiner_links(s, NodeRepr{{2, 3, 5}, 1});
    REQUIRE(links.size() == 2);
    CHECK(links[0].first == b);
    CHECK(links[0].second == NodeRepr{{5, 6}, 2});
    CHECK(links[1].first == n);
    CHECK(links[1].second == NodeRepr{{6, 7, 8}, 2});
    const auto root_links = weiner_links(s, root_repr(s));
    REQUIRE(root_links.size() == 3);
    CHECK(root_links[0].first == a);
    CHECK(root_links[1].first == b);
    CHECK(root_links[2].first == n);
    for (const auto& [c, node] : root_links) {
        CHECK(node.first.front() >= s.c_array(c));
        CHECK(node.first.back() <= s.c_array(c + 1));
    }
}

TEST_CASE("weiner tree of small texts") {
    const auto idx = oracle::naive_build("banana#");
    const auto got = weiner_nodes(seq(idx.bwt));
    CHECK(got == oracle_nodes(idx));
    CHECK(got.size() == 4);
    const auto aa = weiner_nodes(seq("aa#"));
    CHECK(aa == std::vector<NodeRepr>{{{1, 2, 4}, 0}, {{2, 3, 4}, 1}});
    CHECK(weiner_nodes(seq("#")) == std::vector<NodeRepr>{{{1, 2}, 0}});
}

TEST_CASE("weiner tree matches the oracle on random texts and collections") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 500; ++round) {
        const unsigned sigma = std::vector<unsigned>{2, 4, 8}[round % 3];
        std::vector<std::string> strings;
        if (round % 2) strings = testing::random_collection(rng, 1 + rng() % 8, 1 + rng() % 120, testing::letters(sigma));
        else strings = {testing::random_text(rng, 1 + rng() % 1000, testing::letters(sigma))};
        const auto idx = oracle::naive_build(strings);
        const BwtSequence s = seq(idx.bwt);
        TraversalStats st;
        const auto got = weiner_nodes(s, &st);
        REQUIRE(got == oracle_nodes(idx));
        const pos_t n = idx.size();
        CHECK(got.size() <= std::max<pos_t>(1, n - 1));
        const double bound = 4.0 * s.sigma() * std::max(1.0, std::log2(static_cast<double>(n)));
        CHECK(static_cast<double>(st.stack_high_water) <= bound);
        // Total Weiner links (right-maximal or not) stay linear.
        std::size_t links = 0;
        for (const auto& node : got) links += weiner_links(s, node).size();
        CHECK(links <= 4 * n);
    }
}

TEST_CASE("leaves of banana and of a repeated string") {
    const auto want = std::vector<LeafItem>{{{1, 1}, 0}, {{2, 2}, 1}, {{3, 3}, 3}, {{4, 4}, 5},
                                            {{5, 5}, 6}, {{6, 6}, 2}, {{7, 7}, 4}};
    for (auto strat : {LeafStrategy::stack, LeafStrategy::queue}) {
        CHECK(leaves(seq("annb#aa"), {strat, 1, false}) == want);
        const auto dup = leaves(seq("aa##"), {strat, 1, false});
        CHECK(dup == std::vector<LeafItem>{{{1, 2}, 0}, {{3, 4}, 1}});
    }
    CHECK(oracle_leaves(oracle::naive_build({"a#", "a#"})) ==
          std::vector<LeafItem>{{{1, 2}, 0}, {{3, 4}, 1}});
}

TEST_CASE("leaf visits cover [1, n] and agree across strategies") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 300; ++round) {
        const unsigned sigma = std::vector<unsigned>{2, 4, 8}[round % 3];
        auto strings = testing::random_collection(rng, 1 + rng() % 10, 1 + rng() % 60, testing::letters(sigma));
        const auto idx = oracle::naive_build(strings);
        const BwtSequence s = seq(idx.bwt);
        const auto want = oracle_leaves(idx);
        const auto st = leaves(s, {LeafStrategy::stack, std::nullopt, false});
        REQUIRE(st == want);
        REQUIRE(leaves(s, {LeafStrategy::queue, 1, false}) == want);
        REQUIRE(leaves(s, {LeafStrategy::queue, std::nullopt, false}) == want);
        pos_t covered = 0;
        for (const auto& l : st) covered += l.interval.length();
        CHECK(covered == idx.size());
        // Pruned visits keep exactly the non-singleton leaves and the root.
        std::vector<LeafItem> non_single;
        for (const auto& l : want)
            if (l.depth == 0 || l.interval.length() > 1) non_single.push_back(l);
        CHECK(leaves(s, {LeafStrategy::stack, std::nullopt, true}) == non_single);
    }
}

TEST_CASE("leaf visit requires a terminator") {
    CHECK_THROWS_AS(leaves(seq("abc"), {}), std::invalid_argument);
}

TEST_CASE("strategy thresholds") {
    CHECK_FALSE(prefers_leaf_queue(1u << 20, 4));
    CHECK(prefers_leaf_queue(64, 4));
    CHECK(resolve(LeafStrategy::queue, 1u << 20, 4) == LeafStrategy::queue);
}

TEST_CASE("weiner tree on the packed DNA backend") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 50; ++round) {
        const std::string t = testing::random_text(rng, 2 + rng() % 800, "ACGT");
        const auto idx = oracle::naive_build(t);
        const auto d = DnaBwtSequence::build(testing::bytes(idx.bwt), DnaVariant::dna5);
        std::vector<NodeRepr> got;
        visit_weiner_tree(d, [&](const NodeView& v) { got.push_back(v.to_repr()); });
        CHECK(testing::sorted(got) == oracle_nodes(idx));
    }
}
