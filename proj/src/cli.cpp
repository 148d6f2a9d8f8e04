#include "bwtcst/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "bwtcst/dnapack.hpp"
#include "bwtcst/io.hpp"
#include "bwtcst/lcp.hpp"
#include "bwtcst/merge.hpp"
#include "bwtcst/oracle.hpp"
#include "bwtcst/plcp.hpp"
#include "bwtcst/stree.hpp"
#include "bwtcst/suffix_sort.hpp"
#include "bwtcst/wavelet.hpp"

namespace bwtcst::cli {

namespace {

enum class Backend { automatic, wavelet, dnapack };

/// Bad input or arguments; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest input the check subcommand hands to the quadratic oracle.
constexpr pos_t check_limit = 20000;

const std::map<std::string, Backend> backend_names{
    {"auto", Backend::automatic}, {"wavelet", Backend::wavelet}, {"dnapack", Backend::dnapack}};
const std::map<std::string, NodeStrategy> node_names{{"auto", NodeStrategy::automatic},
                                                     {"belazzougui", NodeStrategy::belazzougui},
                                                     {"bgos", NodeStrategy::bgos}};
const std::map<std::string, LeafStrategy> leaf_names{
    {"auto", LeafStrategy::automatic}, {"stack", LeafStrategy::stack}, {"queue", LeafStrategy::queue}};

std::uint8_t terminator_byte(const std::string& t) {
    if (t.size() != 1) throw InputError("terminator must be a single byte");
    return static_cast<std::uint8_t>(t[0]);
}

template <class F>
void with_index(std::vector<std::uint8_t>&& bwt, Backend be, std::uint8_t term, F&& f) {
    if (bwt.empty()) throw InputError("input is empty");
    std::optional<DnaVariant> v;
    if (be != Backend::wavelet) v = detect_dna_variant(bwt, term);
    if (be == Backend::dnapack && !v) v = DnaVariant::dna6;  // pack reports the offending byte
    if (v) {
        auto s = DnaBwtSequence::build(bwt, *v, term);
        bwt = {};
        f(s);
    } else {
        auto s = BwtSequence::build(bwt, term);
        bwt = {};
        f(s);
    }
}

template <class F>
void with_index_pair(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, Backend be,
                     std::uint8_t term, F&& f) {
    if (a.empty() || b.empty()) throw InputError("input is empty");
    std::optional<DnaVariant> va, vb;
    if (be != Backend::wavelet) {
        va = detect_dna_variant(a, term);
        vb = detect_dna_variant(b, term);
    }
    if (be == Backend::dnapack || (va && vb)) {
        const DnaVariant v = (va == DnaVariant::dna5 && vb == DnaVariant::dna5) ? DnaVariant::dna5
                                                                                : DnaVariant::dna6;
        const auto s1 = DnaBwtSequence::build(a, v, term);
        const auto s2 = DnaBwtSequence::build(b, v, term);
        f(s1, s2);
    } else {
        const Alphabet al = Alphabet::of_union(a, b, term);
        const auto s1 = BwtSequence::build(a, al);
        const auto s2 = BwtSequence::build(b, al);
        f(s1, s2);
    }
}

template <class S>
void require_valid(const S& s, const std::string& path) {
    const std::string problem = validate_bwt(s);
    if (!problem.empty()) throw InputError(path + ": " + problem);
}

template <class S>
void require_single_text(const S& s, const std::string& path) {
    if (s.count(S::terminator()) != 1)
        throw InputError(path + ": expected the BWT of a single text (found " +
                         std::to_string(s.count(S::terminator())) + " terminators)");
}

std::vector<std::string> load_strings(const std::string& path, bool collection, bool add_term,
                                      std::uint8_t term) {
    const auto bytes = io::read_file(path);
    std::vector<std::string> strings;
    if (collection) {
        strings = io::split_lines(bytes);
    } else {
        strings.emplace_back(bytes.begin(), bytes.end());
    }
    if (strings.empty()) throw InputError(path + ": no input strings");
    std::size_t offset = 0;
    for (auto& s : strings) {
        if (add_term) s += static_cast<char>(term);
        const auto p = s.find(static_cast<char>(term));
        if (p == std::string::npos)
            throw InputError(path + ": string at byte offset " + std::to_string(offset) +
                             " lacks a terminator (use --add-terminator)");
        if (p != s.size() - 1)
            throw InputError(path + ": terminator inside a string at byte offset " +
                             std::to_string(offset + p));
        offset += s.size() - (add_term ? 1 : 0) + (collection ? 1 : 0);
    }
    return strings;
}

pos_t block_from(pos_t block, double eps, pos_t n, unsigned sigma) {
    if (block) return block;
    if (!(eps > 0.0 && eps <= 1.0)) throw InputError("epsilon must lie in (0, 1]");
    return default_block_chars(n, sigma, eps);
}

struct Common {
    std::string input, output;
    std::string backend = "auto";
    std::string terminator = "#";
};

int cmd_build_bwt(const std::string& in, const std::string& outp, bool collection, bool add_term,
                  const std::string& t) {
    const std::uint8_t term = terminator_byte(t);
    const auto strings = load_strings(in, collection, add_term, term);
    const auto bwt = build_bwt(strings, term);
    io::write_file(outp, bwt);
    return exit_ok;
}

int cmd_bwt2lcp(const Common& c, unsigned width, const std::string& node, const std::string& leaf,
                std::optional<std::size_t> threshold) {
    LcpOptions opt;
    opt.node = node_names.at(node);
    opt.leaf = leaf_names.at(leaf);
    opt.queue_threshold = threshold;
    auto bytes = io::read_file(c.input);
    with_index(std::move(bytes), backend_names.at(c.backend), terminator_byte(c.terminator),
               [&](const auto& s) {
                   require_valid(s, c.input);
                   const LcpArray a = build_lcp(s, width, opt, true);
                   io::write_file(c.output, a.bytes());
               });
    return exit_ok;
}

int cmd_plcp(const Common& c, double eps, pos_t block, pos_t cap, bool stats, std::ostream& out) {
    auto bytes = io::read_file(c.input);
    with_index(std::move(bytes), backend_names.at(c.backend), terminator_byte(c.terminator),
               [&](const auto& s) {
                   require_valid(s, c.input);
                   require_single_text(s, c.input);
                   PlcpOptions opt;
                   opt.block = block_from(block, eps, s.size(), s.sigma());
                   opt.small_cap = cap;
                   PlcpStats st;
                   const BitVec bits = build_plcp(s, opt, &st);
                   io::write_file(c.output, io::encode_bits(bits));
                   if (stats)
                       out << "blocks " << st.blocks << " block_size " << st.block_size
                           << " small_cap " << st.small_cap << " lookups " << st.lookups
                           << " derived " << st.derived << " large " << st.large << "\n";
               });
    return exit_ok;
}

int cmd_bps(const Common& c, double eps, pos_t block, unsigned cap, bool internal_only,
            const std::string& strategy, bool stats, std::ostream& out) {
    auto bytes = io::read_file(c.input);
    with_index(std::move(bytes), backend_names.at(c.backend), terminator_byte(c.terminator),
               [&](const auto& s) {
                   require_valid(s, c.input);
                   require_single_text(s, c.input);
                   BpsOptions opt;
                   opt.block = block_from(block, eps, s.size(), s.sigma());
                   opt.cap = cap;
                   opt.internal_only = internal_only;
                   opt.st.strategy = node_names.at(strategy);
                   BpsStats st;
                   const BitVec bits = build_bps(s, opt, &st);
                   io::write_file(c.output, io::encode_bits(bits));
                   if (stats)
                       out << "blocks " << st.blocks << " block_size " << st.block_size
                           << " saturated " << st.saturated << " length " << bits.size() << "\n";
               });
    return exit_ok;
}

struct MergeArgs {
    std::string in1, in2, da, bwt, lcp;
    bool da_text = false, no_shortcut = false;
    unsigned width = 4;
    std::string backend = "auto", leaf = "auto", terminator = "#";
    std::optional<std::size_t> threshold;
};

int cmd_merge(const MergeArgs& m) {
    if (m.da.empty() && m.bwt.empty() && m.lcp.empty())
        throw InputError("merge needs at least one of --da, --bwt, --lcp");
    const auto b1 = io::read_file(m.in1);
    const auto b2 = io::read_file(m.in2);
    MergeOptions opt;
    opt.strategy = leaf_names.at(m.leaf);
    opt.queue_threshold = m.threshold;
    opt.leaf_shortcut = !m.no_shortcut;
    with_index_pair(b1, b2, backend_names.at(m.backend), terminator_byte(m.terminator),
                    [&](const auto& s1, const auto& s2) {
                        require_valid(s1, m.in1);
                        require_valid(s2, m.in2);
                        BitVec da;
                        if (!m.lcp.empty()) {
                            MergeResult r = merge_with_lcp(s1, s2, m.width, opt, true);
                            io::write_file(m.lcp, r.lcp.bytes());
                            da = std::move(r.da);
                        } else {
                            da = merge_da(s1, s2, opt);
                        }
                        if (!m.da.empty()) {
                            if (m.da_text) {
                                const std::string text = io::bits_to_lines(da);
                                io::write_file(m.da, std::span(reinterpret_cast<const std::uint8_t*>(
                                                                   text.data()),
                                                               text.size()));
                            } else {
                                io::write_file(m.da, io::encode_bits(da));
                            }
                        }
                        if (!m.bwt.empty()) io::write_file(m.bwt, interleave_bwt(b1, b2, da));
                    });
    return exit_ok;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

int cmd_check(const std::string& in, bool collection, bool add_term, const std::string& t,
              std::ostream& out) {
    const std::uint8_t term = terminator_byte(t);
    const auto strings = load_strings(in, collection, add_term, term);
    pos_t total = 0;
    for (const auto& s : strings) total += s.size();
    if (total > check_limit)
        throw InputError(in + ": check is limited to " + std::to_string(check_limit) +
                         " characters");
    const oracle::NaiveIndex idx = oracle::naive_build(strings, term);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    const auto bwt = build_bwt(strings, term);
    report("bwt", std::string(bwt.begin(), bwt.end()) == idx.bwt);
    const bool single = strings.size() == 1;
    const std::vector<pos_t> expected_lcp = idx.lcp;

    auto run_lcp = [&](const auto& s, const std::string& backend) {
        for (auto node : {NodeStrategy::belazzougui, NodeStrategy::bgos}) {
            for (auto leaf : {LeafStrategy::stack, LeafStrategy::queue}) {
                LcpOptions o;
                o.node = node;
                o.leaf = leaf;
                if (leaf == LeafStrategy::queue) o.queue_threshold = 1;
                const auto a = build_lcp(s, 8, o);
                report("lcp " + backend + " " +
                           (node == NodeStrategy::bgos ? "bgos" : "belazzougui") + " " +
                           (leaf == LeafStrategy::queue ? "queue" : "stack"),
                       a.values() == expected_lcp);
            }
        }
    };
    const BwtSequence ws = BwtSequence::build(bwt, term);
    report("bwt valid", validate_bwt(ws).empty());
    run_lcp(ws, "wavelet");
    const auto variant = detect_dna_variant(bwt, term);
    if (variant) run_lcp(DnaBwtSequence::build(bwt, *variant, term), "dnapack");

    if (single) {
        std::vector<StInterval> want;
        for (const auto& rm : oracle::naive_right_maximal(idx))
            want.push_back(StInterval{rm.range, rm.w.size()});
        want = sorted(want);
        for (auto strat : {NodeStrategy::belazzougui, NodeStrategy::bgos}) {
            std::vector<StInterval> got;
            StOptions so;
            so.strategy = strat;
            enumerate_st_intervals(ws, so, [&](const StInterval& v) { got.push_back(v); });
            report(std::string("st-intervals ") +
                       (strat == NodeStrategy::bgos ? "bgos" : "belazzougui"),
                   sorted(got) == want);
        }
        const std::string parens = oracle::naive_bps(idx);
        const BitVec want_bps = oracle::parens_to_bits(parens);
        const pos_t n = idx.size();
        for (pos_t b : {pos_t{1}, pos_t{7}, n}) {
            for (unsigned cap : {2u, 255u}) {
                BpsOptions bo;
                bo.block = b;
                bo.cap = cap;
                report("bps block " + std::to_string(b) + " cap " + std::to_string(cap),
                       build_bps(ws, bo) == want_bps);
            }
        }
        const BitVec want_plcp = oracle::naive_plcp_bits(idx);
        for (pos_t b : {pos_t{1}, pos_t{16}, n}) {
            for (pos_t cap : {pos_t{1}, pos_t{0}}) {
                PlcpOptions po;
                po.block = b;
                po.small_cap = cap;
                report("plcp block " + std::to_string(b) + " cap " +
                           (cap ? std::to_string(cap) : std::string("default")),
                       build_plcp(ws, po) == want_plcp);
            }
        }
    }

    std::vector<std::string> first, second;
    if (single) {
        first = second = strings;
    } else {
        const std::size_t half = strings.size() / 2;
        first.assign(strings.begin(), strings.begin() + static_cast<std::ptrdiff_t>(half));
        second.assign(strings.begin() + static_cast<std::ptrdiff_t>(half), strings.end());
    }
    const auto i1 = oracle::naive_build(first, term);
    const auto i2 = oracle::naive_build(second, term);
    const auto u = oracle::naive_union(i1, i2);
    const auto x = build_bwt(first, term), y = build_bwt(second, term);
    with_index_pair(x, y, Backend::wavelet, term, [&](const auto& s1, const auto& s2) {
        for (auto leaf : {LeafStrategy::stack, LeafStrategy::queue}) {
            MergeOptions mo;
            mo.strategy = leaf;
            if (leaf == LeafStrategy::queue) mo.queue_threshold = 1;
            const std::string tag = leaf == LeafStrategy::queue ? "queue" : "stack";
            const BitVec da = merge_da(s1, s2, mo);
            report("merge da " + tag, da == oracle::naive_da(i1, i2));
            const auto merged = interleave_bwt(x, y, da);
            report("merge bwt " + tag, std::string(merged.begin(), merged.end()) == u.bwt);
            const MergeResult r = merge_with_lcp(s1, s2, 8, mo);
            report("merge lcp " + tag, r.lcp.values() == u.lcp);
        }
    });
    out << (failures ? "FAILED " + std::to_string(failures) + " check(s)" : std::string("ALL PASSED"))
        << "\n";
    return failures ? exit_verify_failed : exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Suffix-tree components (LCP, PLCP, BPS, document array) from a BWT", "bwtcst"};
    app.require_subcommand(1);

    auto backend_check = CLI::IsMember({"auto", "wavelet", "dnapack"});
    auto node_check = CLI::IsMember({"auto", "belazzougui", "bgos"});
    auto leaf_check = CLI::IsMember({"auto", "stack", "queue"});

    std::string in, outp, term = "#";
    bool collection = false, add_term = false;
    auto* build = app.add_subcommand("build-bwt", "BWT of a text or collection (test-data generator)");
    build->add_option("input", in, "text file, or one string per line with --collection")->required();
    build->add_option("-o,--output", outp, "BWT output file")->required();
    build->add_flag("--collection", collection, "treat each line as one string");
    build->add_flag("--add-terminator", add_term, "append the terminator to every string");
    build->add_option("--terminator", term, "terminator byte")->capture_default_str();

    Common common;
    unsigned width = 4;
    std::string node = "auto", leaf = "auto";
    std::optional<std::size_t> threshold;
    auto* lcp = app.add_subcommand("bwt2lcp", "LCP array from a BWT");
    lcp->add_option("input", common.input, "BWT file")->required();
    lcp->add_option("-o,--output", common.output, "LCP output file")->required();
    lcp->add_option("--width", width, "bytes per LCP value")
        ->check(CLI::IsMember({1u, 2u, 4u, 8u}))
        ->capture_default_str();
    lcp->add_option("--backend", common.backend)->check(backend_check)->capture_default_str();
    lcp->add_option("--node-strategy", node)->check(node_check)->capture_default_str();
    lcp->add_option("--leaf-strategy", leaf)->check(leaf_check)->capture_default_str();
    lcp->add_option("--queue-threshold", threshold, "switch queues to bitvectors above this size");
    lcp->add_option("--terminator", common.terminator)->capture_default_str();

    double eps = 0.5;
    pos_t block = 0, plcp_cap = 0;
    unsigned bps_cap = 255;
    bool stats = false, internal_only = false;
    std::string st_strategy = "auto";
    auto* plcp = app.add_subcommand("plcp", "PLCP bitvector of a single text's BWT");
    plcp->add_option("input", common.input, "BWT file")->required();
    plcp->add_option("-o,--output", common.output, "PLCP bit file")->required();
    plcp->add_option("--epsilon", eps, "block size parameter in (0, 1]")->capture_default_str();
    plcp->add_option("--block", block, "SA positions per block (overrides --epsilon)");
    plcp->add_option("--cap", plcp_cap, "largest value kept in the small table (default log^3 n)");
    plcp->add_option("--backend", common.backend)->check(backend_check)->capture_default_str();
    plcp->add_option("--terminator", common.terminator)->capture_default_str();
    plcp->add_flag("--stats", stats, "print block statistics");

    auto* bps = app.add_subcommand("bps", "balanced-parentheses suffix-tree topology");
    bps->add_option("input", common.input, "BWT file")->required();
    bps->add_option("-o,--output", common.output, "BPS bit file")->required();
    bps->add_option("--epsilon", eps, "block size parameter in (0, 1]")->capture_default_str();
    bps->add_option("--block", block, "SA positions per block (overrides --epsilon)");
    bps->add_option("--cap", bps_cap, "saturation value of the 8-bit counters")
        ->check(CLI::Range(1u, 255u))
        ->capture_default_str();
    bps->add_flag("--internal-only", internal_only, "omit leaves");
    bps->add_option("--strategy", st_strategy)->check(node_check)->capture_default_str();
    bps->add_option("--backend", common.backend)->check(backend_check)->capture_default_str();
    bps->add_option("--terminator", common.terminator)->capture_default_str();
    bps->add_flag("--stats", stats, "print block statistics");

    MergeArgs m;
    auto* merge = app.add_subcommand("merge", "merge two BWTs: document array, BWT and LCP of the union");
    merge->add_option("bwt1", m.in1, "first BWT file")->required();
    merge->add_option("bwt2", m.in2, "second BWT file")->required();
    merge->add_option("--da", m.da, "document array output");
    merge->add_flag("--da-text", m.da_text, "write the document array as one digit per line");
    merge->add_option("--bwt", m.bwt, "merged BWT output");
    merge->add_option("--lcp", m.lcp, "LCP of the union output");
    merge->add_option("--width", m.width, "bytes per LCP value")
        ->check(CLI::IsMember({1u, 2u, 4u, 8u}))
        ->capture_default_str();
    merge->add_option("--leaf-strategy", m.leaf)->check(leaf_check)->capture_default_str();
    merge->add_option("--queue-threshold", m.threshold);
    merge->add_flag("--no-leaf-shortcut", m.no_shortcut, "push single-suffix ranges as well");
    merge->add_option("--backend", m.backend)->check(backend_check)->capture_default_str();
    merge->add_option("--terminator", m.terminator)->capture_default_str();

    auto* check = app.add_subcommand("check", "run every pipeline against the brute-force oracle");
    check->add_option("input", in, "text file, or one string per line with --collection")->required();
    check->add_flag("--collection", collection, "treat each line as one string");
    check->add_flag("--add-terminator", add_term, "append the terminator to every string");
    check->add_option("--terminator", term)->capture_default_str();

    std::vector<std::string> argv_store{"bwtcst"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*build) return cmd_build_bwt(in, outp, collection, add_term, term);
        if (*lcp) return cmd_bwt2lcp(common, width, node, leaf, threshold);
        if (*plcp) return cmd_plcp(common, eps, block, plcp_cap, stats, out);
        if (*bps) return cmd_bps(common, eps, block, bps_cap, internal_only, st_strategy, stats, out);
        if (*merge) return cmd_merge(m);
        if (*check) return cmd_check(in, collection, add_term, term, out);
    } catch (const std::exception& e) {
        err << "bwtcst: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace bwtcst::cli
