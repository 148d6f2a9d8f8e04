#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bwtcst/bitvec.hpp"
#include "bwtcst/bwt_index.hpp"
#include "bwtcst/containers.hpp"
#include "bwtcst/enumerate.hpp"
#include "bwtcst/lcp.hpp"
#include "bwtcst/types.hpp"

namespace bwtcst {

struct StInterval {
    Interval interval;
    pos_t depth = 0;

    friend bool operator==(const StInterval&, const StInterval&) = default;
    friend auto operator<=>(const StInterval&, const StInterval&) = default;
};

struct StOptions {
    NodeStrategy strategy = NodeStrategy::automatic;
    std::optional<std::size_t> queue_threshold;
    /// Above this many marks the generation bitvector is wiped word-wise.
    std::optional<std::size_t> set_threshold;
};

/// Visits <range(W), |W|> for every right-maximal W, the root first.
template <BwtIndex S, class Visit>
TraversalStats enumerate_st_intervals(const S& s, const StOptions& opt, Visit&& visit) {
    const pos_t n = s.size();
    if (resolve(opt.strategy, n, s.sigma()) == NodeStrategy::belazzougui) {
        return visit_weiner_tree(s, [&](const NodeView& v) {
            visit(StInterval{v.range(), v.depth});
        });
    }
    TraversalStats stats;
    const Interval all{1, n};
    visit(StInterval{all, 0});
    ++stats.visited;

    BitVec done(n), gen(n);
    std::vector<pos_t> marked;
    const std::size_t set_threshold = opt.set_threshold.value_or(n / 64 + 1);
    NestedIntervalQueue cur(n, opt.queue_threshold), next(n, opt.queue_threshold);
    const symbol_t term = s.has_terminator() ? S::terminator() : s.sigma();
    for (symbol_t c = 0; c < s.sigma(); ++c) {
        if (s.count(c) == 0) continue;
        const Interval r = char_range(s, c);
        if (c != term && r.left > 1) done.set(r.left);
        cur.push(NestedItem{r, all});
    }
    for (pos_t depth = 1; !cur.empty(); ++depth) {
        cur.drain([&](const NestedItem& item) {
            s.get_intervals(item.inner, [&](symbol_t a, Interval r) {
                if (r.right == n || done.get(r.right + 1)) return;
                done.set(r.right + 1);
                const Interval ax = s.bwsearch(item.outer, a);
                if (!gen.get(ax.left)) {
                    gen.set(ax.left);
                    marked.push_back(ax.left);
                    ++stats.visited;
                    visit(StInterval{ax, depth});
                }
                next.push(NestedItem{r, ax});
            });
        });
        if (marked.size() > set_threshold) {
            gen.clear();
        } else {
            for (pos_t p : marked) gen.reset(p);
        }
        marked.clear();
        std::swap(cur, next);
    }
    return stats;
}

struct BpsOptions {
    pos_t block = 0;               ///< SA positions per block; 0 selects the default
    unsigned cap = 255;            ///< saturation value of the 8-bit counters
    bool internal_only = false;    ///< omit the "()" of every leaf
    StOptions st;
};

struct BpsStats {
    pos_t blocks = 0;
    pos_t saturated = 0;
    pos_t block_size = 0;
};

/// max(1, ceil(eps * n * log2(sigma) / 16)): two 8-bit counters per
/// position then take about eps * n * log2(sigma) bits.
inline pos_t default_block_chars(pos_t n, unsigned sigma, double eps = 0.5) {
    const double lg = sigma > 1 ? std::log2(static_cast<double>(sigma)) : 1.0;
    const double b = std::ceil(eps * static_cast<double>(n) * lg / 16.0);
    return std::max<pos_t>(1, static_cast<pos_t>(b));
}

/// Balanced parentheses (1 = open) of the suffix tree, children in
/// lexicographic order, built block by block from per-position open and
/// close counts.
template <BwtIndex S>
BitVec build_bps(const S& s, const BpsOptions& opt = {}, BpsStats* stats = nullptr) {
    const pos_t n = s.size();
    if (opt.cap < 1 || opt.cap > 255) throw std::invalid_argument("counter cap must be in [1, 255]");
    const pos_t block = opt.block ? opt.block : default_block_chars(n, s.sigma());
    const std::uint8_t cap = static_cast<std::uint8_t>(opt.cap);
    BpsStats st;
    st.block_size = block;
    BitVec out;
    std::vector<std::uint8_t> open, close;
    std::vector<pos_t> large_open, large_close;
    for (pos_t b0 = 1; b0 <= n; b0 += block) {
        const pos_t b1 = std::min(n, b0 + block - 1);
        const pos_t len = b1 - b0 + 1;
        ++st.blocks;
        const std::uint8_t leaf = opt.internal_only ? 0 : 1;
        open.assign(len, std::min(leaf, cap));
        close.assign(len, std::min(leaf, cap));
        auto bump = [cap](std::uint8_t& x) { if (x < cap) ++x; };
        enumerate_st_intervals(s, opt.st, [&](const StInterval& v) {
            if (v.interval.left >= b0 && v.interval.left <= b1) bump(open[v.interval.left - b0]);
            if (v.interval.right >= b0 && v.interval.right <= b1) bump(close[v.interval.right - b0]);
        });
        BitVec sat_open(len), sat_close(len);
        bool any = false;
        for (pos_t k = 0; k < len; ++k) {
            if (open[k] == cap) { sat_open.set(k + 1); any = true; }
            if (close[k] == cap) { sat_close.set(k + 1); any = true; }
        }
        RankedBitVec ro, rc;
        if (any) {
            ro = RankedBitVec(std::move(sat_open));
            rc = RankedBitVec(std::move(sat_close));
            st.saturated += ro.ones() + rc.ones();
            large_open.assign(ro.ones(), leaf);
            large_close.assign(rc.ones(), leaf);
            enumerate_st_intervals(s, opt.st, [&](const StInterval& v) {
                const pos_t l = v.interval.left, r = v.interval.right;
                if (l >= b0 && l <= b1 && ro.get(l - b0 + 1)) ++large_open[ro.rank1(l - b0 + 1)];
                if (r >= b0 && r <= b1 && rc.get(r - b0 + 1)) ++large_close[rc.rank1(r - b0 + 1)];
            });
        }
        for (pos_t k = 0; k < len; ++k) {
            const pos_t o = any && ro.get(k + 1) ? large_open[ro.rank1(k + 1)] : open[k];
            const pos_t c = any && rc.get(k + 1) ? large_close[rc.rank1(k + 1)] : close[k];
            for (pos_t t = 0; t < o; ++t) out.push_back(true);
            for (pos_t t = 0; t < c; ++t) out.push_back(false);
        }
    }
    if (stats) *stats = st;
    return out;
}

} // namespace bwtcst
