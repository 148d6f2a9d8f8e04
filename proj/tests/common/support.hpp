#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bwtcst/oracle.hpp"
#include "bwtcst/suffix_sort.hpp"
#include "bwtcst/wavelet.hpp"

namespace bwtcst::testing {

inline std::span<const std::uint8_t> bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline std::string str(std::span<const std::uint8_t> b) { return std::string(b.begin(), b.end()); }

inline BwtSequence seq(std::string_view bwt) { return BwtSequence::build(bytes(bwt)); }

/// First k letters of a fixed alphabet; k = 4 gives "acgt", k = 5 adds 'n'.
inline std::string letters(unsigned sigma) {
    static const std::string abc = "abcdefghijklmnopqrstuvwxyz";
    return abc.substr(0, sigma);
}

inline std::string random_body(std::mt19937_64& rng, std::size_t len, const std::string& alpha) {
    std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
    std::string s(len, ' ');
    for (auto& c : s) c = alpha[pick(rng)];
    return s;
}

/// Random terminated text of total length n (n >= 1).
inline std::string random_text(std::mt19937_64& rng, std::size_t n, const std::string& alpha) {
    return random_body(rng, n - 1, alpha) + '#';
}

/// Fibonacci word over {a, b} cut to n - 1 characters, terminated.
inline std::string fibonacci_text(std::size_t n) {
    std::string a = "a", b = "ab";
    while (b.size() < n) {
        std::string c = b + a;
        a = std::move(b);
        b = std::move(c);
    }
    return b.substr(0, n - 1) + '#';
}

/// Random collection of m terminated strings with lengths in [1, maxlen]
/// (terminator included); with probability 1/4 a string repeats an
/// earlier one.
inline std::vector<std::string> random_collection(std::mt19937_64& rng, std::size_t m,
                                                  std::size_t maxlen, const std::string& alpha) {
    std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, maxlen));
    std::uniform_int_distribution<int> dup(0, 3);
    std::vector<std::string> out;
    for (std::size_t j = 0; j < m; ++j) {
        if (!out.empty() && dup(rng) == 0) {
            std::uniform_int_distribution<std::size_t> which(0, out.size() - 1);
            out.push_back(out[which(rng)]);
        } else {
            out.push_back(random_text(rng, len(rng), alpha));
        }
    }
    return out;
}

inline std::string concat_bwt(const std::vector<std::string>& strings) {
    return str(build_bwt(strings));
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace bwtcst::testing
