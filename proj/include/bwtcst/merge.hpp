#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bwtcst/bitvec.hpp"
#include "bwtcst/bwt_index.hpp"
#include "bwtcst/containers.hpp"
#include "bwtcst/enumerate.hpp"
#include "bwtcst/lcp.hpp"
#include "bwtcst/types.hpp"

namespace bwtcst {

struct MergeOptions {
    LeafStrategy strategy = LeafStrategy::automatic;
    std::optional<std::size_t> queue_threshold;
    /// Follow single-suffix ranges directly instead of pushing them.
    bool leaf_shortcut = true;
};

struct PairLeaf {
    IntervalPair ranges;
    pos_t depth = 0;
};

namespace detail {

template <BwtIndex S>
void require_shared_alphabet(const S& s1, const S& s2) {
    if (s1.sigma() != s2.sigma()) throw std::invalid_argument("sequences use different alphabets");
    if constexpr (requires { s1.alphabet() == s2.alphabet(); }) {
        if (!(s1.alphabet() == s2.alphabet()))
            throw std::invalid_argument("sequences use different alphabets");
    }
}

} // namespace detail

/// Visits every pair <range1(W#), range2(W#)> of the two collections with
/// |W|, starting from the two terminator ranges.
template <BwtIndex S, class Visit>
TraversalStats visit_leaf_pairs(const S& s1, const S& s2, const MergeOptions& opt, Visit&& visit) {
    detail::require_shared_alphabet(s1, s2);
    TraversalStats stats;
    const IntervalPair root{terminator_range(s1), terminator_range(s2)};
    const pos_t n1 = s1.size(), n2 = s2.size();

    auto chain = [&](IntervalPair p, pos_t depth) {
        for (;;) {
            ++stats.visited;
            visit(PairLeaf{p, depth});
            bool found = false;
            s1.get_intervals_pair(s2, p.first, p.second, [&](symbol_t, Interval a, Interval b) {
                p = IntervalPair{a, b};
                found = true;
            });
            if (!found) return;
            ++depth;
        }
    };
    auto shortcut = [&](const IntervalPair& p) {
        return opt.leaf_shortcut && p.combined().length() == 1;
    };

    if (resolve(opt.strategy, n1 + n2, s1.sigma()) == LeafStrategy::stack) {
        IntervalStack<PairLeaf> stack;
        std::vector<IntervalPair> batch;
        stack.push(PairLeaf{root, 0});
        while (!stack.empty()) {
            const PairLeaf item = stack.pop();
            ++stats.visited;
            visit(item);
            batch.clear();
            s1.get_intervals_pair(s2, item.ranges.first, item.ranges.second,
                                  [&](symbol_t, Interval a, Interval b) {
                                      batch.push_back(IntervalPair{a, b});
                                  });
            std::stable_sort(batch.begin(), batch.end(), [](const auto& a, const auto& b) {
                return a.combined().length() > b.combined().length();
            });
            for (const auto& p : batch) {
                if (shortcut(p)) chain(p, item.depth + 1);
                else stack.push(PairLeaf{p, item.depth + 1});
            }
        }
        stats.stack_high_water = stack.high_water();
        return stats;
    }
    PairIntervalQueue cur(n1, n2, opt.queue_threshold), next(n1, n2, opt.queue_threshold);
    cur.push(root);
    for (pos_t depth = 0; !cur.empty(); ++depth) {
        cur.drain([&](const IntervalPair& p) {
            ++stats.visited;
            visit(PairLeaf{p, depth});
            s1.get_intervals_pair(s2, p.first, p.second, [&](symbol_t, Interval a, Interval b) {
                const IntervalPair q{a, b};
                if (shortcut(q)) chain(q, depth + 1);
                else next.push(q);
            });
        });
        std::swap(cur, next);
    }
    return stats;
}

/// Document array of the union: bit i is set iff the i-th suffix comes from
/// the second collection. Equal suffixes order the first collection first.
template <BwtIndex S>
BitVec merge_da(const S& s1, const S& s2, const MergeOptions& opt = {},
                TraversalStats* stats = nullptr) {
    BitVec da(s1.size() + s2.size());
    const auto st = visit_leaf_pairs(s1, s2, opt, [&](const PairLeaf& leaf) {
        const Interval c = leaf.ranges.combined();
        for (pos_t i = c.left + leaf.ranges.first.length(); i <= c.right; ++i) da.set(i);
    });
    if (stats) *stats = st;
    return da;
}

/// Interleaves two BWTs by a document array. Throws std::invalid_argument
/// if the array does not match the input lengths.
inline std::vector<std::uint8_t> interleave_bwt(std::span<const std::uint8_t> s1,
                                                std::span<const std::uint8_t> s2,
                                                const BitVec& da) {
    if (da.size() != s1.size() + s2.size())
        throw std::invalid_argument("document array length differs from input lengths");
    if (da.count() != s2.size())
        throw std::invalid_argument("document array has " + std::to_string(da.count()) +
                                    " ones, expected " + std::to_string(s2.size()));
    std::vector<std::uint8_t> out;
    out.reserve(da.size());
    std::size_t a = 0, b = 0;
    for (pos_t i = 1; i <= da.size(); ++i) out.push_back(da.get(i) ? s2[b++] : s1[a++]);
    return out;
}

/// Node representations of the same string on two collections, aligned by
/// the union of child characters; a side lacking a child holds an empty
/// range there.
struct PairNodeView {
    std::span<const pos_t> first1;
    std::span<const pos_t> first2;
    pos_t depth = 0;

    std::size_t children() const noexcept { return first1.size() - 1; }
    /// Start of child i in the union.
    pos_t combined(std::size_t i) const noexcept { return first1[i] + first2[i] - 1; }
};

/// Visits every right-maximal substring of the union as a PairNodeView.
template <BwtIndex S, class Visit>
TraversalStats visit_weiner_tree_pair(const S& s1, const S& s2, Visit&& visit) {
    detail::require_shared_alphabet(s1, s2);
    struct Frame {
        std::size_t offset;
        std::size_t count;
        pos_t depth;
    };
    struct Candidate {
        pos_t length;
        symbol_t c;
        std::size_t offset;
        std::size_t count;
    };
    TraversalStats stats;
    std::vector<pos_t> pool1, pool2, cur1, cur2, buf1, buf2, r1, r2, row1, row2;
    std::vector<Frame> frames;
    std::vector<Candidate> cands;
    std::vector<symbol_t> chars;

    for (symbol_t c = 0; c < s1.sigma(); ++c) {
        if (s1.count(c) + s2.count(c) == 0) continue;
        pool1.push_back(s1.c_array(c));
        pool2.push_back(s2.c_array(c));
    }
    pool1.push_back(s1.size() + 1);
    pool2.push_back(s2.size() + 1);
    frames.push_back(Frame{0, pool1.size(), 0});
    stats.stack_high_water = 1;

    while (!frames.empty()) {
        const Frame f = frames.back();
        frames.pop_back();
        const auto off = static_cast<std::ptrdiff_t>(f.offset);
        const auto end = static_cast<std::ptrdiff_t>(f.offset + f.count);
        cur1.assign(pool1.begin() + off, pool1.begin() + end);
        cur2.assign(pool2.begin() + off, pool2.begin() + end);
        pool1.resize(f.offset);
        pool2.resize(f.offset);
        ++stats.visited;
        visit(PairNodeView{cur1, cur2, f.depth});

        chars = s1.range_distinct(Interval{cur1.front(), cur1.back() - 1});
        const auto more = s2.range_distinct(Interval{cur2.front(), cur2.back() - 1});
        chars.insert(chars.end(), more.begin(), more.end());
        std::sort(chars.begin(), chars.end());
        chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
        const std::size_t m = chars.size(), nb = f.count;
        r1.resize(nb * m);
        r2.resize(nb * m);
        for (std::size_t i = 0; i < nb; ++i) {
            s1.rank_many(cur1[i], chars, std::span(r1).subspan(i * m, m));
            s2.rank_many(cur2[i], chars, std::span(r2).subspan(i * m, m));
        }
        buf1.clear();
        buf2.clear();
        cands.clear();
        for (std::size_t ci = 0; ci < m; ++ci) {
            const symbol_t c = chars[ci];
            const pos_t base1 = s1.c_array(c), base2 = s2.c_array(c);
            row1.clear();
            row2.clear();
            for (std::size_t i = 0; i < nb; ++i) {
                const pos_t v1 = base1 + r1[i * m + ci], v2 = base2 + r2[i * m + ci];
                if (!row1.empty() && row1.back() == v1 && row2.back() == v2) continue;
                row1.push_back(v1);
                row2.push_back(v2);
            }
            if (row1.size() < 3) continue;
            const pos_t length = (row1.back() - row1.front()) + (row2.back() - row2.front());
            cands.push_back(Candidate{length, c, buf1.size(), row1.size()});
            buf1.insert(buf1.end(), row1.begin(), row1.end());
            buf2.insert(buf2.end(), row2.begin(), row2.end());
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            return a.length != b.length ? a.length > b.length : a.c < b.c;
        });
        for (const auto& cd : cands) {
            const auto b = static_cast<std::ptrdiff_t>(cd.offset);
            const auto e = static_cast<std::ptrdiff_t>(cd.offset + cd.count);
            frames.push_back(Frame{pool1.size(), cd.count, f.depth + 1});
            pool1.insert(pool1.end(), buf1.begin() + b, buf1.begin() + e);
            pool2.insert(pool2.end(), buf2.begin() + b, buf2.begin() + e);
        }
        stats.stack_high_water = std::max(stats.stack_high_water, frames.size());
    }
    return stats;
}

struct MergeResult {
    BitVec da;
    LcpArray lcp;
};

/// Document array and LCP array of the union in one pass over each
/// traversal. Width rules follow build_lcp.
template <BwtIndex S>
MergeResult merge_with_lcp(const S& s1, const S& s2, unsigned width, const MergeOptions& opt = {},
                           bool allow_narrow = false) {
    const pos_t n = s1.size() + s2.size();
    if (!allow_narrow && width < 8 && min_lcp_width(n) > width)
        throw std::invalid_argument("LCP width " + std::to_string(width) +
                                    " cannot hold values up to " + std::to_string(n - 1));
    MergeResult res{BitVec(n), LcpArray(n, width)};
    visit_leaf_pairs(s1, s2, opt, [&](const PairLeaf& leaf) {
        const Interval c = leaf.ranges.combined();
        for (pos_t i = c.left + leaf.ranges.first.length(); i <= c.right; ++i) res.da.set(i);
        for (pos_t i = leaf.depth == 0 ? c.left : c.left + 1; i <= c.right; ++i)
            res.lcp.set(i, leaf.depth);
    });
    visit_weiner_tree_pair(s1, s2, [&](const PairNodeView& v) {
        for (std::size_t i = 1; i < v.children(); ++i) res.lcp.set(v.combined(i), v.depth);
    });
    return res;
}

} // namespace bwtcst
