#pragma once

#include <cassert>
#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "bwtcst/bitvec.hpp"
#include "bwtcst/types.hpp"

namespace bwtcst {

/// floor(n / log2 n) for n >= 2, 1 otherwise.
inline std::size_t default_queue_threshold(pos_t n) {
    if (n < 2) return 1;
    return static_cast<std::size_t>(n / floor_log2(n));
}

/// LIFO container with a high-water mark.
template <class T>
class IntervalStack {
public:
    void push(T value) {
        items_.push_back(std::move(value));
        if (items_.size() > high_water_) high_water_ = items_.size();
    }
    T pop() {
        T v = std::move(items_.back());
        items_.pop_back();
        return v;
    }
    const T& top() const { return items_.back(); }
    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }
    std::size_t high_water() const noexcept { return high_water_; }

private:
    std::vector<T> items_;
    std::size_t high_water_ = 0;
};

/// Queue of pairwise disjoint SA ranges of one string depth. Below the
/// threshold the ranges are kept in a FIFO vector; once more than
/// `threshold` ranges are pushed, they move to two bitvectors of length n
/// marking the left and right boundaries. Draining a packed queue visits
/// ranges by increasing left endpoint.
class IntervalQueue {
public:
    explicit IntervalQueue(pos_t n, std::optional<std::size_t> threshold = std::nullopt)
        : n_(n), threshold_(threshold.value_or(default_queue_threshold(n))) {}

    void push(Interval iv) {
        assert(!iv.empty() && iv.left >= 1 && iv.right <= n_);
        if (!packed_) {
            plain_.push_back(iv);
            if (plain_.size() > threshold_) migrate();
            return;
        }
        assert(!open_.get(iv.left) && !close_.get(iv.right));
        open_.set(iv.left);
        close_.set(iv.right);
        ++size_;
    }

    std::size_t size() const noexcept { return packed_ ? size_ : plain_.size(); }
    bool empty() const noexcept { return size() == 0; }
    bool packed() const noexcept { return packed_; }
    std::size_t threshold() const noexcept { return threshold_; }

    /// Visits every queued range once and leaves the queue empty (plain mode).
    template <class Visit>
    void drain(Visit&& visit) {
        if (!packed_) {
            std::vector<Interval> items;
            items.swap(plain_);
            for (const auto& iv : items) visit(iv);
            return;
        }
        pos_t close_from = 1;
        for (pos_t l = open_.next_one(1); l != npos; l = open_.next_one(l + 1)) {
            const pos_t r = close_.next_one(std::max(l, close_from));
            close_from = r + 1;
            visit(Interval{l, r});
        }
        reset_packed();
    }

private:
    void migrate() {
        if (open_.size() != n_) {
            open_ = BitVec(n_);
            close_ = BitVec(n_);
        }
        packed_ = true;
        size_ = 0;
        std::vector<Interval> items;
        items.swap(plain_);
        for (const auto& iv : items) push(iv);
    }
    void reset_packed() {
        open_.clear();
        close_.clear();
        packed_ = false;
        size_ = 0;
    }

    pos_t n_;
    std::size_t threshold_;
    bool packed_ = false;
    std::size_t size_ = 0;
    std::vector<Interval> plain_;
    BitVec open_, close_;
};

/// A range together with an enclosing range: <range(W), range(X)> with
/// W a right-extension of X.
struct NestedItem {
    Interval inner;
    Interval outer;

    friend bool operator==(const NestedItem&, const NestedItem&) = default;
    friend auto operator<=>(const NestedItem&, const NestedItem&) = default;
};

/// Queue variant carrying the enclosing range of each element. Inner ranges
/// are pairwise disjoint; outer ranges are pairwise disjoint or identical.
/// The packed form uses open/close for inner and a second open/close pair
/// for outer ranges.
class NestedIntervalQueue {
public:
    explicit NestedIntervalQueue(pos_t n,
                                 std::optional<std::size_t> threshold = std::nullopt)
        : n_(n), threshold_(threshold.value_or(default_queue_threshold(n))) {}

    void push(const NestedItem& item) {
        assert(item.outer.left <= item.inner.left && item.inner.right <= item.outer.right);
        if (!packed_) {
            plain_.push_back(item);
            if (plain_.size() > threshold_) migrate();
            return;
        }
        assert(!open_.get(item.inner.left));
        open_.set(item.inner.left);
        close_.set(item.inner.right);
        outer_open_.set(item.outer.left);
        outer_close_.set(item.outer.right);
        ++size_;
    }

    std::size_t size() const noexcept { return packed_ ? size_ : plain_.size(); }
    bool empty() const noexcept { return size() == 0; }
    bool packed() const noexcept { return packed_; }

    template <class Visit>
    void drain(Visit&& visit) {
        if (!packed_) {
            std::vector<NestedItem> items;
            items.swap(plain_);
            for (const auto& it : items) visit(it);
            return;
        }
        pos_t outer_close_from = 1, open_from = 1, close_from = 1;
        for (pos_t i = outer_open_.next_one(1); i != npos; i = outer_open_.next_one(i + 1)) {
            const pos_t j = outer_close_.next_one(std::max(i, outer_close_from));
            outer_close_from = j + 1;
            for (pos_t l = open_.next_one(std::max(i, open_from)); l != npos && l <= j;
                 l = open_.next_one(l + 1)) {
                const pos_t r = close_.next_one(std::max(l, close_from));
                close_from = r + 1;
                open_from = l + 1;
                visit(NestedItem{Interval{l, r}, Interval{i, j}});
            }
        }
        open_.clear();
        close_.clear();
        outer_open_.clear();
        outer_close_.clear();
        packed_ = false;
        size_ = 0;
    }

private:
    void migrate() {
        if (open_.size() != n_) {
            open_ = BitVec(n_);
            close_ = BitVec(n_);
            outer_open_ = BitVec(n_);
            outer_close_ = BitVec(n_);
        }
        packed_ = true;
        size_ = 0;
        std::vector<NestedItem> items;
        items.swap(plain_);
        for (const auto& it : items) push(it);
    }

    pos_t n_;
    std::size_t threshold_;
    bool packed_ = false;
    std::size_t size_ = 0;
    std::vector<NestedItem> plain_;
    BitVec open_, close_, outer_open_, outer_close_;
};

/// Ranges of one string on two collections; either side may be empty.
struct IntervalPair {
    Interval first;
    Interval second;

    /// Range of the same string in the union of the two collections.
    constexpr Interval combined() const noexcept {
        return Interval{first.left + second.left - 1, first.right + second.right};
    }

    friend bool operator==(const IntervalPair&, const IntervalPair&) = default;
    friend auto operator<=>(const IntervalPair&, const IntervalPair&) = default;
};

/// Queue of interval pairs for the two-collection traversal. Combined ranges
/// are pairwise disjoint. Packed form: Open/Close over the union,
/// NonEmpty1/NonEmpty2 flags at each combined left endpoint, and
/// Open_j/Close_j over each collection for non-empty sides only. An empty
/// side is rebuilt from the other as L_j = L - L_other + 1.
class PairIntervalQueue {
public:
    PairIntervalQueue(pos_t n1, pos_t n2,
                      std::optional<std::size_t> threshold = std::nullopt)
        : n1_(n1), n2_(n2),
          threshold_(threshold.value_or(default_queue_threshold(n1 + n2))) {}

    void push(const IntervalPair& item) {
        assert(!item.first.empty() || !item.second.empty());
        if (!packed_) {
            plain_.push_back(item);
            if (plain_.size() > threshold_) migrate();
            return;
        }
        const Interval c = item.combined();
        assert(!open_.get(c.left));
        open_.set(c.left);
        close_.set(c.right);
        if (!item.first.empty()) {
            nonempty1_.set(c.left);
            open1_.set(item.first.left);
            close1_.set(item.first.right);
        }
        if (!item.second.empty()) {
            nonempty2_.set(c.left);
            open2_.set(item.second.left);
            close2_.set(item.second.right);
        }
        ++size_;
    }

    std::size_t size() const noexcept { return packed_ ? size_ : plain_.size(); }
    bool empty() const noexcept { return size() == 0; }
    bool packed() const noexcept { return packed_; }

    template <class Visit>
    void drain(Visit&& visit) {
        if (!packed_) {
            std::vector<IntervalPair> items;
            items.swap(plain_);
            for (const auto& it : items) visit(it);
            return;
        }
        pos_t close_from = 1, o1 = 1, c1 = 1, o2 = 1, c2 = 1;
        for (pos_t l = open_.next_one(1); l != npos; l = open_.next_one(l + 1)) {
            const pos_t r = close_.next_one(std::max(l, close_from));
            close_from = r + 1;
            std::optional<Interval> a, b;
            if (nonempty1_.get(l)) {
                const pos_t al = open1_.next_one(o1);
                const pos_t ar = close1_.next_one(std::max(al, c1));
                o1 = al + 1;
                c1 = ar + 1;
                a = Interval{al, ar};
            }
            if (nonempty2_.get(l)) {
                const pos_t bl = open2_.next_one(o2);
                const pos_t br = close2_.next_one(std::max(bl, c2));
                o2 = bl + 1;
                c2 = br + 1;
                b = Interval{bl, br};
            }
            if (!a) {
                const pos_t al = l - b->left + 1;
                a = Interval{al, al - 1};
            }
            if (!b) {
                const pos_t bl = l - a->left + 1;
                b = Interval{bl, bl - 1};
            }
            visit(IntervalPair{*a, *b});
        }
        for (BitVec* bv : {&open_, &close_, &nonempty1_, &nonempty2_, &open1_, &close1_,
                           &open2_, &close2_})
            bv->clear();
        packed_ = false;
        size_ = 0;
    }

private:
    void migrate() {
        if (open_.size() != n1_ + n2_) {
            open_ = BitVec(n1_ + n2_);
            close_ = BitVec(n1_ + n2_);
            nonempty1_ = BitVec(n1_ + n2_);
            nonempty2_ = BitVec(n1_ + n2_);
            open1_ = BitVec(n1_);
            close1_ = BitVec(n1_);
            open2_ = BitVec(n2_);
            close2_ = BitVec(n2_);
        }
        packed_ = true;
        size_ = 0;
        std::vector<IntervalPair> items;
        items.swap(plain_);
        for (const auto& it : items) push(it);
    }

    pos_t n1_, n2_;
    std::size_t threshold_;
    bool packed_ = false;
    std::size_t size_ = 0;
    std::vector<IntervalPair> plain_;
    BitVec open_, close_, nonempty1_, nonempty2_, open1_, close1_, open2_, close2_;
};

} // namespace bwtcst
