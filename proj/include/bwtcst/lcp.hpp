#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bwtcst/bitvec.hpp"
#include "bwtcst/bwt_index.hpp"
#include "bwtcst/containers.hpp"
#include "bwtcst/enumerate.hpp"
#include "bwtcst/types.hpp"

namespace bwtcst {

enum class NodeStrategy { automatic, belazzougui, bgos };

/// Queue-based (bgos) node enumeration when sigma > sqrt(n) / log^2 n.
inline bool prefers_bgos(pos_t n, unsigned sigma) {
    if (n < 2) return false;
    const double lg = std::log2(static_cast<double>(n));
    return static_cast<double>(sigma) > std::sqrt(static_cast<double>(n)) / (lg * lg);
}

inline NodeStrategy resolve(NodeStrategy s, pos_t n, unsigned sigma) {
    if (s != NodeStrategy::automatic) return s;
    return prefers_bgos(n, sigma) ? NodeStrategy::bgos : NodeStrategy::belazzougui;
}

struct LcpOptions {
    NodeStrategy node = NodeStrategy::automatic;
    LeafStrategy leaf = LeafStrategy::automatic;
    std::optional<std::size_t> queue_threshold;
};

/// Emits emit(i, LCP[i]) for every i where suffixes i-1 and i differ.
template <BwtIndex S, class Emit>
TraversalStats node_type_lcp(const S& s, NodeStrategy strategy, Emit&& emit,
                             std::optional<std::size_t> queue_threshold = std::nullopt) {
    const pos_t n = s.size();
    if (resolve(strategy, n, s.sigma()) == NodeStrategy::belazzougui) {
        return visit_weiner_tree(s, [&](const NodeView& v) {
            for (std::size_t i = 1; i + 1 < v.first.size(); ++i) emit(v.first[i], v.depth);
        });
    }
    TraversalStats stats;
    BitVec done(n);
    IntervalQueue cur(n, queue_threshold), next(n, queue_threshold);
    const symbol_t term = s.has_terminator() ? S::terminator() : s.sigma();
    for (symbol_t c = 0; c < s.sigma(); ++c) {
        if (s.count(c) == 0) continue;
        const Interval r = char_range(s, c);
        if (c != term && r.left > 1) {
            done.set(r.left);
            emit(r.left, pos_t{0});
        }
        cur.push(r);
    }
    for (pos_t depth = 1; !cur.empty(); ++depth) {
        cur.drain([&](Interval iv) {
            ++stats.visited;
            s.get_intervals(iv, [&](symbol_t, Interval r) {
                if (r.right == n || done.get(r.right + 1)) return;
                done.set(r.right + 1);
                emit(r.right + 1, depth);
                next.push(r);
            });
        });
        std::swap(cur, next);
    }
    return stats;
}

/// Emits (i, 0) for i in range(#) and (i, |W|) for the positions after the
/// first in the range of every W#.
template <BwtIndex S, class Emit>
TraversalStats leaf_type_lcp(const S& s, const LeafOptions& opt, Emit&& emit) {
    LeafOptions o = opt;
    o.skip_singletons = true;
    return visit_leaves(s, o, [&](const LeafItem& leaf) {
        const pos_t from = leaf.depth == 0 ? leaf.interval.left : leaf.interval.left + 1;
        for (pos_t i = from; i <= leaf.interval.right; ++i) emit(i, leaf.depth);
    });
}

struct LcpStats {
    TraversalStats node;
    TraversalStats leaf;
};

/// All pairs (i, LCP[i]), each position once, in no particular order.
template <BwtIndex S, class Emit>
LcpStats enumerate_lcp(const S& s, const LcpOptions& opt, Emit&& emit) {
    LcpStats st;
    st.node = node_type_lcp(s, opt.node, emit, opt.queue_threshold);
    st.leaf = leaf_type_lcp(s, LeafOptions{opt.leaf, opt.queue_threshold, true}, emit);
    return st;
}

/// Fixed-width little-endian LCP values, 1-based.
class LcpArray {
public:
    LcpArray() = default;
    LcpArray(pos_t n, unsigned width) : n_(n), width_(width), bytes_(n * width, 0) {
        if (width != 1 && width != 2 && width != 4 && width != 8)
            throw std::invalid_argument("LCP width must be 1, 2, 4 or 8");
    }

    pos_t size() const noexcept { return n_; }
    unsigned width() const noexcept { return width_; }
    pos_t max_value() const noexcept {
        return width_ == 8 ? ~pos_t{0} : (pos_t{1} << (8 * width_)) - 1;
    }

    pos_t get(pos_t i) const noexcept {
        pos_t v = 0;
        std::memcpy(&v, bytes_.data() + (i - 1) * width_, width_);
        return v;
    }
    /// Throws std::overflow_error if v does not fit the width.
    void set(pos_t i, pos_t v) {
        if (v > max_value())
            throw std::overflow_error("LCP value " + std::to_string(v) + " at position " +
                                      std::to_string(i) + " exceeds " +
                                      std::to_string(width_) + "-byte width");
        std::memcpy(bytes_.data() + (i - 1) * width_, &v, width_);
    }

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::vector<pos_t> values() const {
        std::vector<pos_t> out(n_);
        for (pos_t i = 1; i <= n_; ++i) out[i - 1] = get(i);
        return out;
    }

    friend bool operator==(const LcpArray&, const LcpArray&) = default;

private:
    pos_t n_ = 0;
    unsigned width_ = 4;
    std::vector<std::uint8_t> bytes_;
};

/// Smallest of {1, 2, 4, 8} bytes holding n - 1.
inline unsigned min_lcp_width(pos_t n) {
    const pos_t top = n > 0 ? n - 1 : 0;
    for (unsigned w : {1u, 2u, 4u}) if (top < (pos_t{1} << (8 * w))) return w;
    return 8;
}

/// LCP array of the text or collection. Unless `allow_narrow` is set the
/// width must hold n - 1 (std::invalid_argument before any work); with it,
/// an actual overflow raises std::overflow_error.
template <BwtIndex S>
LcpArray build_lcp(const S& s, unsigned width, const LcpOptions& opt = {},
                   bool allow_narrow = false, LcpStats* stats = nullptr) {
    const pos_t n = s.size();
    if (!allow_narrow && width < 8 && min_lcp_width(n) > width)
        throw std::invalid_argument("LCP width " + std::to_string(width) +
                                    " cannot hold values up to " + std::to_string(n - 1));
    LcpArray a(n, width);
    const LcpStats st = enumerate_lcp(s, opt, [&](pos_t i, pos_t v) { a.set(i, v); });
    if (stats) *stats = st;
    return a;
}

} // namespace bwtcst
