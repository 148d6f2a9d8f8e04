#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "bwtcst/dnapack.hpp"
#include "bwtcst/lcp.hpp"
#include "bwtcst/merge.hpp"
#include "bwtcst/oracle.hpp"
#include "bwtcst/plcp.hpp"
#include "bwtcst/stree.hpp"
#include "bwtcst/suffix_sort.hpp"
#include "bwtcst/wavelet.hpp"

namespace py = pybind11;
using namespace bwtcst;

namespace {

std::span<const std::uint8_t> view(const std::string& s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
    return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

std::vector<int> to_bits(const BitVec& b) {
    std::vector<int> out(b.size());
    for (pos_t i = 1; i <= b.size(); ++i) out[i - 1] = b.get(i);
    return out;
}

NodeStrategy node_strategy(const std::string& s) {
    if (s == "auto") return NodeStrategy::automatic;
    if (s == "belazzougui") return NodeStrategy::belazzougui;
    if (s == "bgos") return NodeStrategy::bgos;
    throw py::value_error("unknown node strategy: " + s);
}

LeafStrategy leaf_strategy(const std::string& s) {
    if (s == "auto") return LeafStrategy::automatic;
    if (s == "stack") return LeafStrategy::stack;
    if (s == "queue") return LeafStrategy::queue;
    throw py::value_error("unknown leaf strategy: " + s);
}

template <class F>
auto with_backend(const std::string& bwt, const std::string& backend, F&& f) {
    if (backend != "wavelet" && backend != "auto" && backend != "dnapack")
        throw py::value_error("unknown backend: " + backend);
    std::optional<DnaVariant> v;
    if (backend != "wavelet") v = detect_dna_variant(view(bwt));
    if (backend == "dnapack" && !v) v = DnaVariant::dna6;
    if (v) return f(DnaBwtSequence::build(view(bwt), *v));
    return f(BwtSequence::build(view(bwt)));
}

} // namespace

PYBIND11_MODULE(_bwtcst, m) {
    m.doc() = "LCP, PLCP, suffix-tree topology and BWT merging from a BWT";

    m.def("build_bwt", [](const std::vector<std::string>& strings) { return to_bytes(build_bwt(strings)); },
          py::arg("strings"), "BWT of terminated strings ('#' ends each string)");

    m.def("lcp", [](const std::string& bwt, const std::string& node, const std::string& leaf,
                    const std::string& backend) {
              LcpOptions opt{node_strategy(node), leaf_strategy(leaf), std::nullopt};
              return with_backend(bwt, backend, [&](const auto& s) {
                  return build_lcp(s, 8, opt).values();
              });
          },
          py::arg("bwt"), py::arg("node") = "auto", py::arg("leaf") = "auto", py::arg("backend") = "auto");

    m.def("plcp", [](const std::string& bwt, pos_t block, pos_t cap) {
              return with_backend(bwt, "auto", [&](const auto& s) {
                  return decode_plcp(build_plcp(s, PlcpOptions{block, cap, {}}));
              });
          },
          py::arg("bwt"), py::arg("block") = 0, py::arg("cap") = 0, "PLCP values in text order");

    m.def("bps", [](const std::string& bwt, pos_t block, unsigned cap, bool internal_only) {
              return with_backend(bwt, "auto", [&](const auto& s) {
                  return oracle::bits_to_parens(build_bps(s, BpsOptions{block, cap, internal_only, {}}));
              });
          },
          py::arg("bwt"), py::arg("block") = 0, py::arg("cap") = 255, py::arg("internal_only") = false,
          "suffix-tree topology as a parenthesis string");

    m.def("st_intervals", [](const std::string& bwt) {
              std::vector<std::tuple<pos_t, pos_t, pos_t>> out;
              const auto s = BwtSequence::build(view(bwt));
              enumerate_st_intervals(s, StOptions{}, [&](const StInterval& v) {
                  out.emplace_back(v.interval.left, v.interval.right, v.depth);
              });
              return out;
          },
          py::arg("bwt"), "(left, right, depth) of every internal node");

    m.def("merge", [](const std::string& a, const std::string& b) {
              const Alphabet al = Alphabet::of_union(view(a), view(b));
              const auto s1 = BwtSequence::build(view(a), al);
              const auto s2 = BwtSequence::build(view(b), al);
              const MergeResult r = merge_with_lcp(s1, s2, 8);
              return py::make_tuple(to_bits(r.da), to_bytes(interleave_bwt(view(a), view(b), r.da)),
                                    r.lcp.values());
          },
          py::arg("bwt1"), py::arg("bwt2"), "(document array, merged BWT, LCP) of the union");

    m.def("naive_lcp", [](const std::vector<std::string>& strings) { return oracle::naive_build(strings).lcp; },
          py::arg("strings"), "brute-force LCP for small inputs");
}
