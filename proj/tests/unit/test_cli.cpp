#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <sys/wait.h>

#include "bwtcst/cli.hpp"
#include "bwtcst/io.hpp"
#include "bwtcst/lcp.hpp"
#include "bwtcst/oracle.hpp"
#include "support.hpp"

using namespace bwtcst;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("bwtcst-cli-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, std::string_view content) const {
        const auto p = (path / name).string();
        io::write_file(p, testing::bytes(content));
        return p;
    }
    std::string at(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) { return testing::str(io::read_file(p)); }

std::vector<pos_t> lcp_values(const std::string& bytes, unsigned width) {
    std::vector<pos_t> out;
    for (std::size_t i = 0; i + width <= bytes.size(); i += width) {
        pos_t v = 0;
        for (unsigned k = 0; k < width; ++k) v |= pos_t{static_cast<std::uint8_t>(bytes[i + k])} << (8 * k);
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("build-bwt and bwt2lcp on banana") {
    TempDir d;
    const auto text = d.file("t.txt", "banana#");
    REQUIRE(run({"build-bwt", text, "-o", d.at("t.bwt")}).code == cli::exit_ok);
    CHECK(slurp(d.at("t.bwt")) == "annb#aa");
    for (std::string w : {"1", "2", "4", "8"}) {
        const auto r = run({"bwt2lcp", d.at("t.bwt"), "-o", d.at("t.lcp"), "--width", w});
        REQUIRE(r.code == cli::exit_ok);
        const auto bytes = slurp(d.at("t.lcp"));
        CHECK(bytes.size() == 7 * std::stoul(w));
        CHECK(lcp_values(bytes, std::stoul(w)) == std::vector<pos_t>{0, 0, 1, 3, 0, 0, 2});
    }
    CHECK(slurp(d.at("t.lcp")).size() == 56);
    run({"bwt2lcp", d.at("t.bwt"), "-o", d.at("d.lcp")});
    CHECK(slurp(d.at("d.lcp")).size() == 28);
}

TEST_CASE("collections and added terminators") {
    TempDir d;
    const auto lines = d.file("c.txt", "ab\nb\r\nab\n");
    REQUIRE(run({"build-bwt", lines, "-o", d.at("c.bwt"), "--collection", "--add-terminator"}).code == 0);
    CHECK(slurp(d.at("c.bwt")) == oracle::naive_build({"ab#", "b#", "ab#"}).bwt);
    const auto missing = run({"build-bwt", lines, "-o", d.at("x.bwt"), "--collection"});
    CHECK(missing.code == cli::exit_usage);
    CHECK(missing.err.find("byte offset 0") != std::string::npos);
    const auto inner = d.file("i.txt", "ab#c#");
    const auto r = run({"build-bwt", inner, "-o", d.at("x.bwt")});
    CHECK(r.code == cli::exit_usage);
    CHECK(r.err.find("byte offset 2") != std::string::npos);
}

TEST_CASE("every backend and strategy writes identical bytes") {
    TempDir d;
    std::mt19937_64 rng(81);
    for (int round = 0; round < 20; ++round) {
        const std::string t = testing::random_text(rng, 2 + rng() % 2000, round % 2 ? "ACGT" : "ACGNT");
        const auto bwt = d.file("r.bwt", testing::concat_bwt({t}));
        const auto want = oracle::naive_build(t).lcp;
        for (std::string be : {"auto", "wavelet", "dnapack"})
            for (std::string node : {"belazzougui", "bgos"})
                for (std::string leaf : {"stack", "queue"}) {
                    const auto r = run({"bwt2lcp", bwt, "-o", d.at("r.lcp"), "--backend", be,
                                        "--node-strategy", node, "--leaf-strategy", leaf,
                                        "--queue-threshold", "1"});
                    REQUIRE(r.code == 0);
                    REQUIRE(lcp_values(slurp(d.at("r.lcp")), 4) == want);
                }
    }
}

TEST_CASE("plcp and bps produce bit files") {
    TempDir d;
    const auto bwt = d.file("b.bwt", "annb#aa");
    const auto idx = oracle::naive_build("banana#");
    auto r = run({"plcp", bwt, "-o", d.at("p.bits"), "--block", "3", "--stats"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("lookups") != std::string::npos);
    const auto pbits = io::read_file(d.at("p.bits"));
    CHECK(pbits.size() == 8 + 2);
    CHECK(pbits[0] == 14);
    CHECK(io::decode_bits(pbits) == oracle::naive_plcp_bits(idx));

    r = run({"bps", bwt, "-o", d.at("s.bits"), "--cap", "2", "--epsilon", "1.0"});
    REQUIRE(r.code == 0);
    CHECK(oracle::bits_to_parens(io::decode_bits(io::read_file(d.at("s.bits")))) == oracle::naive_bps(idx));
    r = run({"bps", bwt, "-o", d.at("s.bits"), "--internal-only", "--strategy", "bgos"});
    REQUIRE(r.code == 0);
    CHECK(oracle::bits_to_parens(io::decode_bits(io::read_file(d.at("s.bits")))) == "((())())");

    const auto coll = d.file("c.bwt", oracle::naive_build({"a#", "b#"}).bwt);
    r = run({"plcp", coll, "-o", d.at("p.bits")});
    CHECK(r.code == cli::exit_usage);
    CHECK(r.err.find("single text") != std::string::npos);
    CHECK(run({"bps", coll, "-o", d.at("s.bits")}).code == cli::exit_usage);
    CHECK(run({"plcp", bwt, "-o", d.at("p.bits"), "--epsilon", "0"}).code == cli::exit_usage);
    CHECK(run({"bps", bwt, "-o", d.at("s.bits"), "--cap", "256"}).code == cli::exit_usage);
}

TEST_CASE("merge writes the document array, BWT and LCP") {
    TempDir d;
    const auto a = oracle::naive_build({"ab#", "ba#"}), b = oracle::naive_build({"abb#"});
    const auto u = oracle::naive_union(a, b);
    const auto f1 = d.file("1.bwt", a.bwt), f2 = d.file("2.bwt", b.bwt);
    auto r = run({"merge", f1, f2, "--da", d.at("da"), "--bwt", d.at("m.bwt"), "--lcp", d.at("m.lcp"),
                  "--width", "2"});
    REQUIRE(r.code == 0);
    CHECK(io::decode_bits(io::read_file(d.at("da"))) == oracle::naive_da(a, b));
    CHECK(slurp(d.at("m.bwt")) == u.bwt);
    CHECK(lcp_values(slurp(d.at("m.lcp")), 2) == u.lcp);
    r = run({"merge", f1, f2, "--da", d.at("da.txt"), "--da-text", "--leaf-strategy", "queue",
             "--no-leaf-shortcut"});
    REQUIRE(r.code == 0);
    CHECK(slurp(d.at("da.txt")) == io::bits_to_lines(oracle::naive_da(a, b)));
    CHECK(run({"merge", f1, f2}).code == cli::exit_usage);
    const auto f3 = d.file("3.bwt", "xc#");
    CHECK(run({"merge", f1, f3, "--da", d.at("da")}).code == cli::exit_usage);
}

TEST_CASE("invalid inputs map to exit code 2") {
    TempDir d;
    CHECK(run({}).code == cli::exit_usage);
    CHECK(run({"frobnicate"}).code == cli::exit_usage);
    CHECK(run({"--help"}).code == cli::exit_ok);
    CHECK(run({"bwt2lcp", d.at("missing"), "-o", d.at("o")}).code == cli::exit_usage);
    CHECK(run({"bwt2lcp", d.file("e", ""), "-o", d.at("o")}).code == cli::exit_usage);
    CHECK(run({"bwt2lcp", d.file("b", "annb#aa"), "-o", d.at("o"), "--width", "3"}).code == cli::exit_usage);
    // Not a BWT: the LF walk from '#' closes early.
    const auto r = run({"bwt2lcp", d.file("nb", "ba#ab"), "-o", d.at("o")});
    CHECK(r.code == cli::exit_usage);
    CHECK_FALSE(r.err.empty());
    const auto dna = run({"bwt2lcp", d.file("x", "ACGXT#"), "-o", d.at("o"), "--backend", "dnapack"});
    CHECK(dna.code == cli::exit_usage);
    CHECK(dna.err.find("offset 3") != std::string::npos);
    // Values above the width are an overflow, not a silent truncation.
    const auto longrun = d.file("l", testing::concat_bwt({std::string(300, 'a') + '#'}));
    const auto o = run({"bwt2lcp", longrun, "-o", d.at("o"), "--width", "1"});
    CHECK(o.code == cli::exit_usage);
    CHECK(o.err.find("exceeds") != std::string::npos);
}

TEST_CASE("check runs the oracle comparison") {
    TempDir d;
    auto r = run({"check", d.file("t", "mississippi"), "--add-terminator"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("ALL PASSED") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = run({"check", d.file("c", "GATTACA\nGATT\nACA\n"), "--collection", "--add-terminator"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("lcp dnapack") != std::string::npos);
    CHECK(run({"check", d.file("big", std::string(20001, 'a')), "--add-terminator"}).code == cli::exit_usage);
}

TEST_CASE("the installed binary reports exit codes") {
    TempDir d;
    const std::string bin = BWTCST_CLI_PATH;
    const auto quiet = " >/dev/null 2>&1";
    const auto text = d.file("t", "abracadabra#");
    auto status = [](const std::string& cmd) {
        const int s = std::system(cmd.c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status(bin + " build-bwt " + text + " -o " + d.at("t.bwt") + quiet) == 0);
    CHECK(status(bin + " bwt2lcp " + d.at("t.bwt") + " -o " + d.at("t.lcp") + quiet) == 0);
    CHECK(status(bin + " bwt2lcp " + d.at("nope") + " -o " + d.at("t.lcp") + quiet) == 2);
    CHECK(status(bin + " check " + text + quiet) == 0);
}
