#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bwtcst/bitvec.hpp"
#include "bwtcst/containers.hpp"
#include "support.hpp"

using namespace bwtcst;

TEST_CASE("rank1 counts strictly before the position") {
    const RankedBitVec bv(BitVec::from_string("1011"));
    CHECK(bv.rank1(1) == 0);
    CHECK(bv.rank1(4) == 2);
    CHECK(bv.rank1(5) == 3);
    CHECK(bv.rank0(5) == 1);
    CHECK_THROWS_AS(bv.rank1(0), std::out_of_range);
    CHECK_THROWS_AS(bv.rank1(6), std::out_of_range);
}

TEST_CASE("select1 finds the j-th set bit") {
    const RankedBitVec bv(BitVec::from_string("1011"));
    CHECK(bv.select1(1) == 1);
    CHECK(bv.select1(3) == 4);
    CHECK(RankedBitVec(BitVec::from_string("0010")).select1(1) == 3);
    CHECK(bv.select0(1) == 2);
    CHECK_THROWS_AS(bv.select1(4), std::out_of_range);
    CHECK_THROWS_AS(bv.select1(0), std::out_of_range);
}

TEST_CASE("rank and select agree with a linear scan") {
    std::mt19937_64 rng(7);
    for (pos_t n : {pos_t{1}, pos_t{63}, pos_t{64}, pos_t{65}, pos_t{511}, pos_t{513}, pos_t{100000}}) {
        for (double density : {0.02, 0.5, 0.97}) {
            std::bernoulli_distribution coin(density);
            BitVec raw(n);
            for (pos_t i = 1; i <= n; ++i) raw.assign(i, coin(rng));
            const RankedBitVec bv(raw);
            pos_t ones = 0, zeros = 0;
            for (pos_t i = 1; i <= n; ++i) {
                REQUIRE(bv.rank1(i) == ones);
                if (raw.get(i)) {
                    ++ones;
                    REQUIRE(bv.select1(ones) == i);
                    REQUIRE(bv.select1(bv.rank1(i) + 1) == i);
                } else {
                    ++zeros;
                    REQUIRE(bv.select0(zeros) == i);
                }
            }
            CHECK(bv.rank1(n + 1) == ones);
            CHECK(bv.ones() == ones);
            CHECK(raw.count() == ones);
        }
    }
}

TEST_CASE("next_one scans forward") {
    const BitVec bv = BitVec::from_string("0100000000000000000000000000000000000000000000000000000000000000001");
    CHECK(bv.next_one(1) == 2);
    CHECK(bv.next_one(3) == bv.size());
    CHECK(bv.next_one(bv.size() + 1) == npos);
    CHECK(BitVec(10).next_one(1) == npos);
}

TEST_CASE("push_back grows and compares equal to a preset vector") {
    BitVec a;
    for (int i = 0; i < 130; ++i) a.push_back(i % 3 == 0);
    BitVec b(130);
    for (pos_t i = 1; i <= 130; ++i) if ((i - 1) % 3 == 0) b.set(i);
    CHECK(a == b);
    CHECK(a.to_string().substr(0, 4) == "1001");
}

TEST_CASE("interval stack is LIFO and tracks its high-water mark") {
    IntervalStack<int> st;
    st.push(1);
    st.push(2);
    st.push(3);
    CHECK(st.pop() == 3);
    st.push(4);
    CHECK(st.pop() == 4);
    CHECK(st.pop() == 2);
    CHECK(st.high_water() == 3);
}

TEST_CASE("interval queue round trip") {
    SUBCASE("single item") {
        IntervalQueue q(10);
        q.push({2, 4});
        std::vector<Interval> got;
        q.drain([&](Interval iv) { got.push_back(iv); });
        CHECK(got == std::vector<Interval>{{2, 4}});
        CHECK(q.empty());
    }
    SUBCASE("packed mode visits left to right") {
        IntervalQueue q(10, 1);
        q.push({6, 7});
        q.push({2, 4});
        CHECK(q.packed());
        std::vector<Interval> got;
        q.drain([&](Interval iv) { got.push_back(iv); });
        CHECK(got == std::vector<Interval>{{2, 4}, {6, 7}});
        CHECK_FALSE(q.packed());
    }
    SUBCASE("plain mode keeps FIFO order") {
        IntervalQueue q(10, 100);
        q.push({6, 7});
        q.push({2, 4});
        q.push({5, 5});
        std::vector<Interval> got;
        q.drain([&](Interval iv) { got.push_back(iv); });
        CHECK(got == std::vector<Interval>{{6, 7}, {2, 4}, {5, 5}});
    }
    SUBCASE("empty queue") {
        IntervalQueue q(10, 1);
        int visits = 0;
        q.drain([&](Interval) { ++visits; });
        CHECK(visits == 0);
    }
}

TEST_CASE("random disjoint intervals survive both representations") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const pos_t n = 50 + rng() % 200;
        std::vector<Interval> items;
        for (pos_t p = 1; p <= n;) {
            const pos_t len = 1 + rng() % 6;
            if (p + len - 1 > n) break;
            if (rng() % 3) items.push_back({p, p + len - 1});
            p += len + rng() % 3;
        }
        std::shuffle(items.begin(), items.end(), rng);
        for (std::size_t threshold : {std::size_t{1}, std::size_t{5}, std::size_t{1000}}) {
            IntervalQueue q(n, threshold);
            for (auto iv : items) q.push(iv);
            CHECK(q.size() == items.size());
            std::vector<Interval> got;
            q.drain([&](Interval iv) { got.push_back(iv); });
            CHECK(testing::sorted(got) == testing::sorted(items));
            // Reusable after a drain.
            for (auto iv : items) q.push(iv);
            got.clear();
            q.drain([&](Interval iv) { got.push_back(iv); });
            CHECK(testing::sorted(got) == testing::sorted(items));
        }
    }
    CHECK(default_queue_threshold(1024) == 102);
    CHECK(default_queue_threshold(1) == 1);
}

TEST_CASE("pair queue preserves empty sides") {
    for (std::size_t threshold : {std::size_t{0}, std::size_t{1000}}) {
        PairIntervalQueue q(4, 4, threshold);
        const IntervalPair a{{2, 2}, {1, 0}};
        q.push(a);
        const IntervalPair b{{3, 2}, {2, 3}};
        q.push(b);
        std::vector<IntervalPair> got;
        q.drain([&](const IntervalPair& p) { got.push_back(p); });
        CHECK(testing::sorted(got) == testing::sorted(std::vector<IntervalPair>{a, b}));
        CHECK(a.combined() == Interval{2, 2});
        CHECK(b.combined() == Interval{4, 5});
    }
}

TEST_CASE("random interval pairs survive the packed layout") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        // Build pairs of disjoint ranges walking both sides together.
        pos_t p1 = 1, p2 = 1;
        std::vector<IntervalPair> items;
        for (int k = 0; k < 30; ++k) {
            const pos_t l1 = rng() % 3, l2 = rng() % 3;
            if (l1 + l2 == 0) continue;
            if (rng() % 2) items.push_back({{p1, p1 + l1 - 1}, {p2, p2 + l2 - 1}});
            p1 += l1;
            p2 += l2;
        }
        std::shuffle(items.begin(), items.end(), rng);
        PairIntervalQueue q(p1, p2, 1);
        for (const auto& it : items) q.push(it);
        std::vector<IntervalPair> got;
        q.drain([&](const IntervalPair& p) { got.push_back(p); });
        CHECK(testing::sorted(got) == testing::sorted(items));
    }
}

TEST_CASE("nested queue keeps inner and outer ranges together") {
    const std::vector<NestedItem> items{
        {{2, 2}, {2, 4}}, {{3, 4}, {2, 4}}, {{6, 7}, {6, 7}}, {{9, 9}, {8, 10}}};
    for (std::size_t threshold : {std::size_t{1}, std::size_t{1000}}) {
        NestedIntervalQueue q(12, threshold);
        for (const auto& it : items) q.push(it);
        std::vector<NestedItem> got;
        q.drain([&](const NestedItem& it) { got.push_back(it); });
        CHECK(testing::sorted(got) == items);
    }
}
