#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qldpc/cli.hpp"
#include "qldpc/families.hpp"
#include "qldpc/tanner.hpp"

using namespace qldpc;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("alist round trips") {
    auto i2 = cli::parse_alist("2 2\n1 1\n1 1\n1 1\n1\n2\n1\n2\n");
    CHECK(i2 == gf2::BitMatrix::identity(2));
    for (const auto& name : families::fixture_names()) {
        auto h = tanner::to_biadjacency(families::fixture(name).graph);
        CHECK(cli::parse_alist(cli::write_alist(h)) == h);
    }
}

TEST_CASE("alist errors name the line and constraint") {
    // Truncated file: no partial matrix escapes.
    try {
        (void)cli::parse_alist("2 2\n1 1\n1 1\n1 1\n1\n");
        FAIL("expected AlistError");
    } catch (const cli::AlistError& e) {
        CHECK(contains(e.what(), "file ends before"));
    }
    // Neighbor index out of range.
    CHECK_THROWS_AS((void)cli::parse_alist("2 2\n1 1\n1 1\n1 1\n3\n2\n1\n2\n"),
                    cli::AlistError);
    // Non-integer token.
    try {
        (void)cli::parse_alist("2 x\n");
        FAIL("expected AlistError");
    } catch (const cli::AlistError& e) {
        CHECK(contains(e.what(), "line 1"));
    }
    // Row list inconsistent with column lists.
    CHECK_THROWS_AS((void)cli::parse_alist("2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n"),
                    cli::AlistError);
}

TEST_CASE("decode reports the frozen five-variable example") {
    auto r = run_cli({"decode", "--fixture", "fig2a", "--error", "v1,v2,v3,v5"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "syndrome_bits: 001100110"));
    CHECK(contains(r.out, "estimated_syndrome_bits: 000000001"));
    CHECK(contains(r.out, "estimated_error_support: {v4}"));
    CHECK(contains(r.out, "outcome: SyndromeMismatchConverged"));
}

TEST_CASE("census reports critical number and strength") {
    auto r = run_cli({"census", "--fixture", "fig1", "--fis-weight", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "failure_inducing_count: 5"));
    CHECK(contains(r.out, "critical_number: 3"));
    CHECK(contains(r.out, "strength: 4"));
    CHECK(contains(r.out, "set={v1,v2,v3,v4}"));

    auto empty = run_cli({"census", "--fixture", "fig3a", "--fis-weight", "3"});
    CHECK(empty.code == 0);
    CHECK(contains(empty.out, "critical_number: > 3"));
    CHECK(contains(empty.out, "no failure-inducing sets"));
}

TEST_CASE("certify reports the designated checks") {
    auto r = run_cli({"certify", "--fixture", "fig6", "--a1", "A1", "--part", "A2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "designated_checks={c2,c9}"));
    CHECK(contains(r.out, "kind=Thm6_PartitionUnion"));
}

TEST_CASE("hgp reports the product shape and css validity") {
    auto r = run_cli({"hgp", "--h1", "ex7", "--h2", "ex7"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "h_x_shape: 154x317"));
    CHECK(contains(r.out, "h_z_shape: 154x317"));
    CHECK(contains(r.out, "css_valid: true"));
}

TEST_CASE("input errors exit 2 with a diagnostic") {
    auto bad_fixture = run_cli({"decode", "--fixture", "fig9", "--error", "v1"});
    CHECK(bad_fixture.code == 2);
    CHECK(bad_fixture.out.empty());
    CHECK_FALSE(bad_fixture.err.empty());

    auto bad_parity = run_cli({"generate", "--family", "theta",
                               "--a", "5", "--b", "6", "--c", "4"});
    CHECK(bad_parity.code == 2);
    CHECK(contains(bad_parity.err, "even edge length"));

    auto no_source = run_cli({"decode", "--error", "v1"});
    CHECK(no_source.code == 2);

    auto two_specs = run_cli({"decode", "--fixture", "fig1",
                              "--error", "v1", "--syndrome", "0000000"});
    CHECK(two_specs.code == 2);

    auto bad_flag = run_cli({"decode", "--fixture", "fig1", "--frobnicate"});
    CHECK(bad_flag.code == 2);
}

TEST_CASE("reports are deterministic") {
    std::vector<std::string> args{"census", "--fixture", "ex7_H", "--abs-size", "4"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "absorbing_count: 3"));
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = "/tmp/qldpc_cli_test_report.txt";
    std::remove(path.c_str());
    auto r = run_cli({"decode", "--fixture", "fig2a", "--error", "v2,v4,v5",
                      "--out", path});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "report written to " + path));
    auto body = slurp(path);
    CHECK(contains(body, "syndrome_bits: 111111111"));
    // Rerunning reproduces the file byte for byte.
    auto r2 = run_cli({"decode", "--fixture", "fig2a", "--error", "v2,v4,v5",
                       "--out", path});
    CHECK(r2.code == 0);
    CHECK(slurp(path) == body);
    std::remove(path.c_str());
}

TEST_CASE("generate emits a loadable alist") {
    const std::string path = "/tmp/qldpc_cli_test_graph.alist";
    std::remove(path.c_str());
    auto g = run_cli({"generate", "--family", "dumbbell",
                      "--a1", "6", "--a2", "6", "--b", "4", "--out", path});
    CHECK(g.code == 0);
    CHECK(contains(g.out, "written: " + path));
    auto h = cli::parse_alist(slurp(path));
    auto graph = tanner::from_biadjacency(h);
    CHECK(graph.num_variables() == 7);  // 3 + 3 cycle variables + 1 bridge variable

    auto d = run_cli({"decode", "--alist", path, "--error", "v1,v2,v3"});
    CHECK(d.code == 0);
    CHECK(contains(d.out, "checks_not_matched: {c7,c8}"));
    std::remove(path.c_str());
}

TEST_CASE("success implies a report on stdout or a written file") {
    auto r = run_cli({"generate", "--fixture", "fig5"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "variables: 10"));
    CHECK(contains(r.out, "checks: 25"));
    CHECK(contains(r.out, "tool: qldpc 1.0.0"));
}

}  // TEST_SUITE
