#include "afree/algebra_io.hpp"
#include "afree/borel.hpp"
#include "afree/cli.hpp"
#include "afree/reduction.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace afree;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(AFREE_EXAMPLES_DIR) + "/" + name; }

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("afree_cli_" + name)).string();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("encode")
{
    auto r = run({"encode", data("k3.col")});
    CHECK(r.code == 0);
    CHECK(r.out == write_algebra(encode_shifted(graphs::complete(3), 2)));
    CHECK(r.out.find("d y_1_2 = x1^2 + x1*x2 + x2^2\n") != std::string::npos);

    // Serialization is byte-stable through the reader.
    CHECK(write_algebra(read_algebra(r.out)) == r.out);

    auto e = run({"encode", data("edgeless1.col")});
    CHECK(e.code == 0);
    CHECK(e.out == "sullivan v1\ngen x1 2\nd x1 = 0\n");

    auto k1 = run({"encode", data("k3.col"), "-k", "1"});
    CHECK(k1.code == cli::exit_malformed);
    CHECK(k1.err.find("k >= 2") != std::string::npos);

    auto orig = run({"encode", data("k3.col"), "-k", "3", "--variant", "original"});
    CHECK(orig.code == 0);
    CHECK(orig.out == r.out);

    auto bad = run({"encode", data("malformed.col")});
    CHECK(bad.code == cli::exit_malformed);
    CHECK(bad.err.find("line 2") != std::string::npos);

    std::string path = temp_path("k3.alg");
    CHECK(run({"encode", data("k3.col"), "-o", path}).code == 0);
    CHECK(slurp(path) == r.out);
    std::filesystem::remove(path);
}

TEST_CASE("decide")
{
    auto k4 = run({"decide", data("k4.col")});
    CHECK(k4.code == 0);
    CHECK(k4.out.find("verdict: AlmostFree") != std::string::npos);

    auto k3 = run({"decide", data("k3.col"), "--porcelain"});
    CHECK(k3.code == cli::exit_negative);
    CHECK(k3.out.find("verdict=NotAlmostFree\n") != std::string::npos);
    CHECK(k3.out.find("witness=") != std::string::npos);

    auto both = run({"decide", data("k4.col"), "--method", "certificate_search", "--cross-check", "--porcelain"});
    CHECK(both.code == 0);
    CHECK(both.out.find("cross_check=agree") != std::string::npos);

    auto lex = run({"decide", data("k4.col"), "--order", "lex", "--dump-basis", "-"});
    CHECK(lex.code == 0);
    CHECK(lex.out.rfind("groebner order=lex vars=4\n", 0) == 0);

    CHECK(run({"decide", data("malformed.col")}).code == cli::exit_malformed);
    CHECK(run({"decide", data("k3.col"), "--method", "magic"}).code == cli::exit_malformed);
    CHECK(run({"decide", data("k3.col"), "--order", "revlex"}).code == cli::exit_malformed);
    CHECK(run({"decide", data("no_such_file.col")}).code == cli::exit_io);

    auto disc = run({"decide", data("two_edges.col")});
    CHECK(disc.code == cli::exit_negative);
    CHECK(disc.err.find("disconnected") != std::string::npos);
    CHECK(run({"decide", data("two_edges.col"), "--require-connected"}).code == cli::exit_malformed);

    CHECK(run({"decide", data("k4.col"), "--budget", "1"}).code == cli::exit_budget);
}

TEST_CASE("verify")
{
    auto ok = run({"verify", data("k3.col"), data("k3_proper.cert")});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("accept", 0) == 0);

    auto bad = run({"verify", data("k3.col"), data("k3_improper.cert"), "--porcelain"});
    CHECK(bad.code == cli::exit_negative);
    CHECK(bad.out.find("failing_edge=1,2\n") != std::string::npos);

    CHECK(run({"verify", data("k3.col"), data("k3_missing.cert")}).code == cli::exit_malformed);
    CHECK(run({"verify", data("k3.col"), data("malformed.cert")}).code == cli::exit_malformed);
    CHECK(run({"verify", data("k3.col"), data("k3_proper.cert"), "-k", "3"}).code == cli::exit_malformed);

    // An algebra file works as well as a graph.
    std::string path = temp_path("k3_for_verify.alg");
    REQUIRE(run({"encode", data("k3.col"), "-o", path}).code == 0);
    CHECK(run({"verify", path, data("k3_proper.cert")}).code == 0);
    CHECK(run({"verify", path, data("k3_improper.cert")}).code == cli::exit_negative);
    std::filesystem::remove(path);
}

TEST_CASE("construct and check-borel")
{
    auto c = run({"construct", data("k2.col")});
    CHECK(c.code == 0);
    CHECK(parse_action(c.out) == assemble_action(graphs::complete(2), 2));

    auto b = run({"check-borel", data("k2.col")});
    CHECK(b.code == 0);
    CHECK(b.out.find("all checks passed") != std::string::npos);

    auto p = run({"check-borel", data("p3.col"), "-k", "3", "--porcelain"});
    CHECK(p.code == 0);
    CHECK(p.out.find("kernel_dimension=1\n") != std::string::npos);
    CHECK(p.out.find("result=pass\n") != std::string::npos);

    CHECK(run({"check-borel", data("k2.col"), "-k", "1"}).code == cli::exit_malformed);
}

TEST_CASE("betti")
{
    auto k2 = run({"betti", data("k2.col"), "--cutoff", "6"});
    CHECK(k2.code == 0);
    CHECK(k2.out == "H^0 1\nH^1 0\nH^2 2\nH^3 0\nH^4 2\nH^5 0\nH^6 2\n");

    auto free1 = run({"betti", data("edgeless1.col"), "--cutoff", "6"});
    CHECK(free1.out == "H^0 1\nH^1 0\nH^2 1\nH^3 0\nH^4 1\nH^5 0\nH^6 1\n");

    auto k4 = run({"betti", data("k4.col")});
    CHECK(k4.code == 0);
    CHECK(k4.out.find("H^20 0\n") != std::string::npos);

    CHECK(run({"betti", data("k4.col"), "--budget", "5"}).code == cli::exit_budget);
    CHECK(run({"betti", data("k4.col"), "--cutoff", "-1"}).code == cli::exit_malformed);
}

TEST_CASE("selftest and usage")
{
    auto s = run({"selftest"});
    CHECK(s.code == 0);
    CHECK(s.out.find("FAIL") == std::string::npos);
    CHECK(run({}).code == cli::exit_malformed);
    CHECK(run({"frobnicate"}).code == cli::exit_malformed);
    CHECK(run({"--help"}).code == 0);
}
