#include "bwtcst/suffix_sort.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bwtcst {

namespace {

using idx_t = std::int32_t;

void buckets(const idx_t* s, idx_t n, idx_t k, std::vector<idx_t>& bkt, bool end) {
    bkt.assign(static_cast<std::size_t>(k), 0);
    for (idx_t i = 0; i < n; ++i) ++bkt[s[i]];
    idx_t sum = 0;
    for (idx_t c = 0; c < k; ++c) {
        sum += bkt[c];
        bkt[c] = end ? sum : sum - bkt[c];
    }
}

void induce(const idx_t* s, idx_t* sa, idx_t n, idx_t k, const std::vector<bool>& stype,
            std::vector<idx_t>& bkt) {
    buckets(s, n, k, bkt, false);
    for (idx_t i = 0; i < n; ++i) {
        const idx_t j = sa[i] - 1;
        if (sa[i] > 0 && !stype[j]) sa[bkt[s[j]]++] = j;
    }
    buckets(s, n, k, bkt, true);
    for (idx_t i = n; i-- > 0;) {
        const idx_t j = sa[i] - 1;
        if (sa[i] > 0 && stype[j]) sa[--bkt[s[j]]] = j;
    }
}

void sais(const idx_t* s, idx_t* sa, idx_t n, idx_t k) {
    if (n == 1) {
        sa[0] = 0;
        return;
    }
    std::vector<bool> stype(static_cast<std::size_t>(n));
    stype[n - 1] = true;
    for (idx_t i = n - 1; i-- > 0;)
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    auto lms = [&](idx_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<idx_t> bkt;
    buckets(s, n, k, bkt, true);
    std::fill(sa, sa + n, -1);
    for (idx_t i = 1; i < n; ++i)
        if (lms(i)) sa[--bkt[s[i]]] = i;
    induce(s, sa, n, k, stype, bkt);

    idx_t n1 = 0;
    for (idx_t i = 0; i < n; ++i)
        if (lms(sa[i])) sa[n1++] = sa[i];
    std::fill(sa + n1, sa + n, -1);
    idx_t names = 0, prev = -1;
    for (idx_t i = 0; i < n1; ++i) {
        const idx_t pos = sa[i];
        bool diff = false;
        for (idx_t d = 0; d < n; ++d) {
            if (prev == -1 || s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
                diff = true;
                break;
            }
            if (d > 0 && (lms(pos + d) || lms(prev + d))) break;
        }
        if (diff) {
            ++names;
            prev = pos;
        }
        sa[n1 + pos / 2] = names - 1;
    }
    for (idx_t i = n, j = n; i-- > n1;)
        if (sa[i] >= 0) sa[--j] = sa[i];

    idx_t* s1 = sa + n - n1;
    idx_t* sa1 = sa;
    if (names < n1) {
        sais(s1, sa1, n1, names);
    } else {
        for (idx_t i = 0; i < n1; ++i) sa1[s1[i]] = i;
    }

    buckets(s, n, k, bkt, true);
    for (idx_t i = 1, j = 0; i < n; ++i)
        if (lms(i)) s1[j++] = i;
    for (idx_t i = 0; i < n1; ++i) sa1[i] = s1[sa1[i]];
    std::fill(sa + n1, sa + n, -1);
    for (idx_t i = n1; i-- > 0;) {
        const idx_t j = sa[i];
        sa[i] = -1;
        sa[--bkt[s[j]]] = j;
    }
    induce(s, sa, n, k, stype, bkt);
}

} // namespace

std::vector<std::int32_t> suffix_array(std::span<const std::int32_t> s, std::int32_t alphabet) {
    if (s.empty() || s.back() != 0) throw std::invalid_argument("input must end with sentinel 0");
    if (s.size() > static_cast<std::size_t>(std::numeric_limits<idx_t>::max()))
        throw std::length_error("input too long for 32-bit suffix sorting");
    std::vector<idx_t> sa(s.size());
    sais(s.data(), sa.data(), static_cast<idx_t>(s.size()), alphabet);
    return sa;
}

std::vector<std::uint8_t> build_bwt(const std::vector<std::string>& strings, std::uint8_t term) {
    if (strings.empty()) throw std::invalid_argument("empty collection");
    const auto m = static_cast<std::int64_t>(strings.size());
    std::size_t total = 0;
    for (std::size_t j = 0; j < strings.size(); ++j) {
        const std::string& str = strings[j];
        if (str.empty() || str.find(static_cast<char>(term)) != str.size() - 1)
            throw std::invalid_argument("string " + std::to_string(j) +
                                        " must end with the only terminator");
        total += str.size();
    }
    if (m + 257 > std::numeric_limits<idx_t>::max())
        throw std::length_error("too many strings for 32-bit suffix sorting");
    // Terminator of string j becomes j + 1 and byte b becomes m + 1 + b, so
    // terminators compare by string index and below every other byte.
    std::vector<idx_t> s;
    s.reserve(total + 1);
    std::vector<bool> start(total + 1, false);
    for (std::size_t j = 0; j < strings.size(); ++j) {
        start[s.size()] = true;
        for (char ch : strings[j]) {
            const auto b = static_cast<std::uint8_t>(ch);
            s.push_back(b == term ? static_cast<idx_t>(j + 1) : static_cast<idx_t>(m + 1 + b));
        }
    }
    s.push_back(0);
    const auto sa = suffix_array(s, static_cast<idx_t>(m + 257));
    std::vector<std::uint8_t> bwt(total);
    for (std::size_t i = 1; i <= total; ++i) {
        const auto p = static_cast<std::size_t>(sa[i]);
        bwt[i - 1] = start[p] ? term : static_cast<std::uint8_t>(s[p - 1] - m - 1);
    }
    return bwt;
}

} // namespace bwtcst
