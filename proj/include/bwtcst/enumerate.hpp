#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bwtcst/bwt_index.hpp"
#include "bwtcst/containers.hpp"
#include "bwtcst/types.hpp"

namespace bwtcst {

enum class LeafStrategy { automatic, stack, queue };

/// Node representation <first, depth>: child i of W spans
/// <first[i], first[i+1] - 1>, with first.back() one past right(W).
struct NodeRepr {
    std::vector<pos_t> first;
    pos_t depth = 0;

    std::size_t children() const noexcept { return first.size() - 1; }
    Interval range() const noexcept { return Interval{first.front(), first.back() - 1}; }
    Interval child(std::size_t i) const noexcept { return Interval{first[i], first[i + 1] - 1}; }
    bool right_maximal() const noexcept { return children() >= 2; }

    friend bool operator==(const NodeRepr&, const NodeRepr&) = default;
    friend auto operator<=>(const NodeRepr&, const NodeRepr&) = default;
};

/// Non-owning view of a node representation, valid during a visit callback.
struct NodeView {
    std::span<const pos_t> first;
    pos_t depth = 0;

    std::size_t children() const noexcept { return first.size() - 1; }
    Interval range() const noexcept { return Interval{first.front(), first.back() - 1}; }
    Interval child(std::size_t i) const noexcept { return Interval{first[i], first[i + 1] - 1}; }
    NodeRepr to_repr() const { return NodeRepr{{first.begin(), first.end()}, depth}; }
};

/// Range of a string W# (W free of terminators) and |W|.
struct LeafItem {
    Interval interval;
    pos_t depth = 0;

    friend bool operator==(const LeafItem&, const LeafItem&) = default;
    friend auto operator<=>(const LeafItem&, const LeafItem&) = default;
};

struct TraversalStats {
    std::size_t visited = 0;
    std::size_t stack_high_water = 0;
};

/// Queue path when sigma > n / log^3 n.
inline bool prefers_leaf_queue(pos_t n, unsigned sigma) {
    if (n < 2) return false;
    const double lg = std::log2(static_cast<double>(n));
    return static_cast<double>(sigma) > static_cast<double>(n) / (lg * lg * lg);
}

inline LeafStrategy resolve(LeafStrategy s, pos_t n, unsigned sigma) {
    if (s != LeafStrategy::automatic) return s;
    return prefers_leaf_queue(n, sigma) ? LeafStrategy::queue : LeafStrategy::stack;
}

template <BwtIndex S>
NodeRepr root_repr(const S& s) {
    NodeRepr r;
    for (symbol_t c = 0; c < s.sigma(); ++c)
        if (s.count(c) > 0) r.first.push_back(s.c_array(c));
    r.first.push_back(s.size() + 1);
    return r;
}

namespace detail {

/// Reusable buffers for Weiner-link computation.
struct LinkScratch {
    std::vector<symbol_t> chars;
    std::vector<pos_t> ranks;   // boundaries x chars, row-major
    std::vector<pos_t> out;     // concatenated child first-arrays
    std::vector<pos_t> row;
};

/// Calls emit(c, span first_cW) for every non-terminator c in range(W),
/// empty children removed. Children with a single range remain included.
template <BwtIndex S, class Emit>
void weiner_extend(const S& s, std::span<const pos_t> first, LinkScratch& ws, Emit&& emit) {
    const Interval range{first.front(), first.back() - 1};
    ws.chars = s.range_distinct(range);
    const std::size_t m = ws.chars.size();
    if (m == 0) return;
    const std::size_t nb = first.size();
    ws.ranks.resize(nb * m);
    for (std::size_t i = 0; i < nb; ++i)
        s.rank_many(first[i], ws.chars, std::span(ws.ranks).subspan(i * m, m));
    for (std::size_t ci = 0; ci < m; ++ci) {
        const symbol_t c = ws.chars[ci];
        const pos_t base = s.c_array(c);
        ws.row.clear();
        for (std::size_t i = 0; i < nb; ++i) {
            const pos_t v = base + ws.ranks[i * m + ci];
            if (ws.row.empty() || ws.row.back() != v) ws.row.push_back(v);
        }
        emit(c, std::span<const pos_t>(ws.row));
    }
}

} // namespace detail

/// Weiner links of a node: the representation of cW for every
/// non-terminator c preceding W (right-maximal or not).
template <BwtIndex S>
std::vector<std::pair<symbol_t, NodeRepr>> weiner_links(const S& s, const NodeRepr& node) {
    std::vector<std::pair<symbol_t, NodeRepr>> out;
    detail::LinkScratch ws;
    detail::weiner_extend(s, node.first, ws, [&](symbol_t c, std::span<const pos_t> f) {
        out.emplace_back(c, NodeRepr{{f.begin(), f.end()}, node.depth + 1});
    });
    return out;
}

/// Visits every distinct right-maximal substring (the root included) as a
/// NodeView. Children are pushed by decreasing range length so the stack
/// holds O(sigma log n) nodes.
template <BwtIndex S, class Visit>
TraversalStats visit_weiner_tree(const S& s, Visit&& visit) {
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
    std::vector<pos_t> pool;
    std::vector<Frame> frames;
    std::vector<pos_t> cur;
    std::vector<pos_t> childbuf;
    std::vector<Candidate> cands;
    detail::LinkScratch ws;

    const NodeRepr root = root_repr(s);
    pool.assign(root.first.begin(), root.first.end());
    frames.push_back(Frame{0, pool.size(), 0});
    stats.stack_high_water = 1;

    while (!frames.empty()) {
        const Frame f = frames.back();
        frames.pop_back();
        cur.assign(pool.begin() + static_cast<std::ptrdiff_t>(f.offset),
                   pool.begin() + static_cast<std::ptrdiff_t>(f.offset + f.count));
        pool.resize(f.offset);
        ++stats.visited;
        visit(NodeView{cur, f.depth});

        childbuf.clear();
        cands.clear();
        detail::weiner_extend(s, cur, ws, [&](symbol_t c, std::span<const pos_t> fc) {
            if (fc.size() < 3) return;
            cands.push_back(Candidate{fc.back() - fc.front(), c, childbuf.size(), fc.size()});
            childbuf.insert(childbuf.end(), fc.begin(), fc.end());
        });
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            return a.length != b.length ? a.length > b.length : a.c < b.c;
        });
        for (const auto& cd : cands) {
            frames.push_back(Frame{pool.size(), cd.count, f.depth + 1});
            pool.insert(pool.end(), childbuf.begin() + static_cast<std::ptrdiff_t>(cd.offset),
                        childbuf.begin() + static_cast<std::ptrdiff_t>(cd.offset + cd.count));
        }
        stats.stack_high_water = std::max(stats.stack_high_water, frames.size());
    }
    return stats;
}

struct LeafOptions {
    LeafStrategy strategy = LeafStrategy::automatic;
    std::optional<std::size_t> queue_threshold;
    /// Do not descend into (or report) non-root leaves holding one suffix.
    bool skip_singletons = false;
};

/// Visits the range of every string W# once with depth |W|, starting from
/// range(#) and left-extending by non-terminators. Throws
/// std::invalid_argument if the input has no terminator.
template <BwtIndex S, class Visit>
TraversalStats visit_leaves(const S& s, const LeafOptions& opt, Visit&& visit) {
    TraversalStats stats;
    const Interval root = terminator_range(s);
    const pos_t n = s.size();
    if (resolve(opt.strategy, n, s.sigma()) == LeafStrategy::stack) {
        IntervalStack<LeafItem> stack;
        std::vector<std::pair<symbol_t, Interval>> batch;
        stack.push(LeafItem{root, 0});
        while (!stack.empty()) {
            const LeafItem item = stack.pop();
            ++stats.visited;
            visit(item);
            batch.clear();
            s.get_intervals(item.interval, [&](symbol_t c, Interval r) {
                if (opt.skip_singletons && r.length() == 1) return;
                batch.emplace_back(c, r);
            });
            std::stable_sort(batch.begin(), batch.end(), [](const auto& a, const auto& b) {
                return a.second.length() > b.second.length();
            });
            for (const auto& [c, r] : batch) stack.push(LeafItem{r, item.depth + 1});
        }
        stats.stack_high_water = stack.high_water();
        return stats;
    }
    IntervalQueue cur(n, opt.queue_threshold), next(n, opt.queue_threshold);
    cur.push(root);
    for (pos_t depth = 0; !cur.empty(); ++depth) {
        cur.drain([&](Interval iv) {
            ++stats.visited;
            visit(LeafItem{iv, depth});
            s.get_intervals(iv, [&](symbol_t, Interval r) {
                if (opt.skip_singletons && r.length() == 1) return;
                next.push(r);
            });
        });
        std::swap(cur, next);
    }
    return stats;
}

} // namespace bwtcst
