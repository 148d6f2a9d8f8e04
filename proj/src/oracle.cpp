#include "bwtcst/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bwtcst::oracle {

namespace {

int key(std::uint8_t c, std::uint8_t term) { return c == term ? -1 : c; }

} // namespace

std::string NaiveIndex::suffix(pos_t j) const {
    const Suffix& s = gsa[j - 1];
    return strings[s.string].substr(s.offset);
}

NaiveIndex naive_build(const std::vector<std::string>& strings, std::uint8_t term) {
    if (strings.empty()) throw std::invalid_argument("empty collection");
    for (std::size_t j = 0; j < strings.size(); ++j) {
        const std::string& s = strings[j];
        const auto pos = s.find(static_cast<char>(term));
        if (s.empty() || pos != s.size() - 1)
            throw std::invalid_argument("string " + std::to_string(j) +
                                        " must end with the only terminator");
    }
    NaiveIndex idx;
    idx.strings = strings;
    idx.terminator = term;
    for (std::size_t j = 0; j < strings.size(); ++j)
        for (std::size_t k = 0; k < strings[j].size(); ++k) idx.gsa.push_back(Suffix{j, k});

    auto at = [&](const Suffix& s, std::size_t k) {
        return static_cast<std::uint8_t>(strings[s.string][s.offset + k]);
    };
    std::stable_sort(idx.gsa.begin(), idx.gsa.end(), [&](const Suffix& a, const Suffix& b) {
        for (std::size_t k = 0;; ++k) {
            const int x = key(at(a, k), term), y = key(at(b, k), term);
            if (x != y) return x < y;
            if (x == -1) return a.string < b.string;
        }
    });

    const pos_t n = idx.gsa.size();
    idx.lcp.assign(n, 0);
    idx.equal_prev.assign(n, false);
    for (pos_t i = 1; i < n; ++i) {
        const Suffix& a = idx.gsa[i - 1];
        const Suffix& b = idx.gsa[i];
        pos_t l = 0;
        while (true) {
            const std::uint8_t x = at(a, l), y = at(b, l);
            if (x != y) break;
            if (x == term) {
                idx.equal_prev[i] = true;
                break;
            }
            ++l;
        }
        idx.lcp[i] = l;
    }
    idx.bwt.resize(n);
    for (pos_t i = 0; i < n; ++i) {
        const Suffix& s = idx.gsa[i];
        const std::string& str = strings[s.string];
        idx.bwt[i] = str[(s.offset + str.size() - 1) % str.size()];
    }
    if (strings.size() == 1) {
        idx.sa.resize(n);
        idx.isa.resize(n);
        for (pos_t j = 0; j < n; ++j) {
            idx.sa[j] = idx.gsa[j].offset + 1;
            idx.isa[idx.gsa[j].offset] = j + 1;
        }
    }
    return idx;
}

std::vector<RightMaximal> naive_right_maximal(const NaiveIndex& idx) {
    const pos_t n = idx.size();
    std::map<std::pair<pos_t, pos_t>, RightMaximal> found;  // (left, depth)
    auto add = [&](pos_t i, pos_t d) {
        pos_t l = i, r = i;
        while (l > 1 && idx.lcp[l - 1] >= d) --l;
        while (r < n && idx.lcp[r] >= d) ++r;
        const auto k = std::make_pair(l, d);
        if (found.count(k)) return;
        RightMaximal rm;
        rm.w = idx.suffix(i).substr(0, d);
        rm.range = Interval{l, r};
        rm.child_starts.push_back(l);
        for (pos_t p = l + 1; p <= r; ++p)
            if (idx.lcp[p - 1] == d && !idx.equal_prev[p - 1]) rm.child_starts.push_back(p);
        found.emplace(k, std::move(rm));
    };
    add(1, 0);
    for (pos_t i = 2; i <= n; ++i)
        if (!idx.equal_prev[i - 1]) add(i, idx.lcp[i - 1]);
    std::vector<RightMaximal> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), [](const RightMaximal& a, const RightMaximal& b) {
        if (a.range.left != b.range.left) return a.range.left < b.range.left;
        if (a.range.right != b.range.right) return a.range.right > b.range.right;
        return a.w.size() < b.w.size();
    });
    return out;
}

std::vector<NaiveLeaf> naive_leaves(const NaiveIndex& idx) {
    std::vector<NaiveLeaf> out;
    const pos_t n = idx.size();
    for (pos_t i = 1; i <= n; ++i) {
        if (i > 1 && idx.equal_prev[i - 1]) {
            out.back().range.right = i;
            continue;
        }
        out.push_back(NaiveLeaf{Interval{i, i}, idx.suffix(i).size() - 1});
    }
    return out;
}

std::vector<LcpPair> node_type_pairs(const NaiveIndex& idx) {
    std::vector<LcpPair> out;
    for (pos_t i = 2; i <= idx.size(); ++i)
        if (!idx.equal_prev[i - 1]) out.push_back(LcpPair{i, idx.lcp[i - 1]});
    return out;
}

std::vector<LcpPair> leaf_type_pairs(const NaiveIndex& idx) {
    std::vector<LcpPair> out;
    for (pos_t i = 1; i <= idx.size(); ++i)
        if (i == 1 || idx.equal_prev[i - 1]) out.push_back(LcpPair{i, idx.lcp[i - 1]});
    return out;
}

std::string naive_bps(const NaiveIndex& idx, bool internal_only) {
    struct Node {
        Interval range;
        pos_t depth;
    };
    std::vector<Node> nodes;
    for (const auto& rm : naive_right_maximal(idx)) nodes.push_back(Node{rm.range, rm.w.size()});
    if (!internal_only) {
        for (pos_t i = 1; i <= idx.size(); ++i)
            nodes.push_back(Node{Interval{i, i}, idx.suffix(i).size()});
    }
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
        if (a.range.left != b.range.left) return a.range.left < b.range.left;
        if (a.range.right != b.range.right) return a.range.right > b.range.right;
        return a.depth < b.depth;
    });
    std::string out;
    std::vector<Interval> stack;
    for (const auto& nd : nodes) {
        while (!stack.empty() && stack.back().right < nd.range.left) {
            stack.pop_back();
            out += ')';
        }
        out += '(';
        stack.push_back(nd.range);
    }
    out.append(stack.size(), ')');
    return out;
}

std::vector<pos_t> naive_plcp(const NaiveIndex& idx) {
    if (idx.strings.size() != 1) throw std::invalid_argument("PLCP needs a single text");
    std::vector<pos_t> plcp(idx.size());
    for (pos_t j = 1; j <= idx.size(); ++j) plcp[idx.sa[j - 1] - 1] = idx.lcp[j - 1];
    return plcp;
}

BitVec naive_plcp_bits(const NaiveIndex& idx) {
    const auto plcp = naive_plcp(idx);
    BitVec bits(2 * plcp.size());
    for (pos_t i = 1; i <= plcp.size(); ++i) bits.set(2 * i + plcp[i - 1]);
    return bits;
}

NaiveIndex naive_union(const NaiveIndex& a, const NaiveIndex& b) {
    if (a.terminator != b.terminator) throw std::invalid_argument("terminators differ");
    std::vector<std::string> all = a.strings;
    all.insert(all.end(), b.strings.begin(), b.strings.end());
    return naive_build(all, a.terminator);
}

BitVec naive_da(const NaiveIndex& a, const NaiveIndex& b) {
    const NaiveIndex u = naive_union(a, b);
    BitVec da(u.size());
    for (pos_t i = 1; i <= u.size(); ++i)
        if (u.gsa[i - 1].string >= a.strings.size()) da.set(i);
    return da;
}

std::string naive_invert(std::string_view bwt, std::uint8_t term) {
    const std::size_t n = bwt.size();
    std::vector<std::size_t> count(256, 0), c(257, 0), rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ch = static_cast<std::uint8_t>(bwt[i]);
        rank[i] = count[ch]++;
    }
    // Terminator first, then bytes in order.
    std::size_t acc = count[term];
    std::vector<std::size_t> start(256, 0);
    start[term] = 0;
    for (unsigned b = 0; b < 256; ++b) {
        if (b == term) continue;
        start[b] = acc;
        acc += count[b];
    }
    std::string text(n, '\0');
    std::size_t row = 0;  // suffix "#"
    text[n - 1] = static_cast<char>(term);
    for (std::size_t k = n - 1; k-- > 0;) {
        const auto ch = static_cast<std::uint8_t>(bwt[row]);
        text[k] = static_cast<char>(ch);
        row = start[ch] + rank[row];
    }
    return text;
}

BitVec parens_to_bits(std::string_view parens) {
    BitVec bits;
    for (char p : parens) {
        if (p != '(' && p != ')') throw std::invalid_argument("not a parenthesis");
        bits.push_back(p == '(');
    }
    return bits;
}

std::string bits_to_parens(const BitVec& bits) {
    std::string out;
    out.reserve(bits.size());
    for (pos_t i = 1; i <= bits.size(); ++i) out += bits.get(i) ? '(' : ')';
    return out;
}

} // namespace bwtcst::oracle
