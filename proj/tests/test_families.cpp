#include <doctest.h>

#include <stdexcept>

#include "qldpc/decoder.hpp"
#include "qldpc/families.hpp"
#include "qldpc/tanner.hpp"

using namespace qldpc;
using families::FamilyKind;
using families::FamilySpec;
using families::ThetaVariant;
using gf2::BitVector;
using tanner::VarSubset;

namespace {

VarSubset all_vars(const tanner::TannerGraph& g) {
    std::vector<int> m;
    for (int v = 0; v < g.num_variables(); ++v) m.push_back(v);
    return VarSubset(m);
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("canonical path") {
    auto g = families::generate({.kind = FamilyKind::Path, .a = 3});
    CHECK(g.num_variables() == 3);
    CHECK(g.num_checks() == 2);
    CHECK(g.check_neighbors(0) == std::vector<int>{0, 1});
    CHECK(g.check_neighbors(1) == std::vector<int>{1, 2});
    auto p = tanner::induced_profile(g, all_vars(g));
    CHECK(std::pair{p.a, p.b} == std::pair{3, 0});
    CHECK_THROWS_AS((void)families::generate({.kind = FamilyKind::Path, .a = 1}),
                    std::invalid_argument);
}

TEST_CASE("canonical cycle") {
    auto g = families::generate({.kind = FamilyKind::Cycle, .a = 5});
    CHECK(g.num_variables() == 5);
    CHECK(g.num_checks() == 5);
    for (int v = 0; v < 5; ++v) CHECK(g.var_neighbors(v).size() == 2);
    auto ab = tanner::is_absorbing(g, all_vars(g));
    REQUIRE(ab);
    CHECK(*ab == std::pair<int, int>{5, 0});
    // Syndrome of {v1, v2, v4} on the canonical labeling.
    auto sigma = decoder::compute_syndrome(g, BitVector::from_string("11010"));
    CHECK(sigma == BitVector::from_string("01111"));
}

TEST_CASE("paths and cycles are (a,0)-absorbing") {
    for (int a = 2; a <= 9; ++a) {
        auto p = families::generate({.kind = FamilyKind::Path, .a = a});
        auto ab = tanner::is_absorbing(p, all_vars(p));
        REQUIRE(ab);
        CHECK(*ab == std::pair<int, int>{a, 0});
        auto c = families::generate({.kind = FamilyKind::Cycle, .a = a});
        auto abc = tanner::is_absorbing(c, all_vars(c));
        REQUIRE(abc);
        CHECK(*abc == std::pair<int, int>{a, 0});
    }
}

TEST_CASE("theta variants") {
    auto va = families::generate(
        {.kind = FamilyKind::Theta, .a = 6, .b = 6, .c = 4, .variant = ThetaVariant::JunctionsVariables});
    CHECK(va.num_variables() == 7);
    auto ab = tanner::is_absorbing(va, all_vars(va));
    REQUIRE(ab);
    CHECK(*ab == std::pair<int, int>{7, 0});
    // Junctions (v1, v2 in the canonical labeling) have degree 3.
    CHECK(va.var_neighbors(0).size() == 3);
    CHECK(va.var_neighbors(1).size() == 3);

    auto ch = families::generate(
        {.kind = FamilyKind::Theta, .a = 6, .b = 6, .c = 4, .variant = ThetaVariant::JunctionsChecks});
    CHECK(ch.num_variables() == 8);
    CHECK(ch.num_checks() == 7);
    CHECK_FALSE(tanner::is_absorbing(ch, all_vars(ch)));
}

TEST_CASE("illegal theta parities are rejected with the constraint named") {
    for (auto variant : {ThetaVariant::JunctionsVariables, ThetaVariant::JunctionsChecks}) {
        try {
            (void)families::generate(
                {.kind = FamilyKind::Theta, .a = 5, .b = 6, .c = 4, .variant = variant});
            FAIL("expected rejection");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("even edge length") != std::string::npos);
        }
    }
    CHECK_THROWS_AS((void)families::generate({.kind = FamilyKind::Theta, .a = 0, .b = 6, .c = 4}),
                    std::invalid_argument);
}

TEST_CASE("dumbbell constituents are (a/2,1)-absorbing") {
    for (auto [a1, a2, b] : {std::tuple{8, 8, 2}, {6, 6, 2}, {6, 6, 4}, {6, 8, 2}}) {
        auto g = families::generate({.kind = FamilyKind::Dumbbell, .b = b, .a1 = a1, .a2 = a2});
        std::vector<int> c1, c2;
        for (int i = 0; i < a1 / 2; ++i) c1.push_back(i);
        for (int i = 0; i < a2 / 2; ++i) c2.push_back(a1 / 2 + i);
        auto p1 = tanner::is_absorbing(g, VarSubset(c1));
        auto p2 = tanner::is_absorbing(g, VarSubset(c2));
        REQUIRE(p1);
        REQUIRE(p2);
        CHECK(*p1 == std::pair<int, int>{a1 / 2, 1});
        CHECK(*p2 == std::pair<int, int>{a2 / 2, 1});
    }
    CHECK_THROWS_AS((void)families::generate({.kind = FamilyKind::Dumbbell, .b = 3, .a1 = 6, .a2 = 6}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)families::generate({.kind = FamilyKind::Dumbbell, .b = 2, .a1 = 5, .a2 = 6}),
                    std::invalid_argument);
}

TEST_CASE("zero-length dumbbell bridge merges the junctions") {
    auto g = families::generate({.kind = FamilyKind::Dumbbell, .b = 0, .a1 = 8, .a2 = 8});
    CHECK(g.num_variables() == 7);  // 4 + 4 - shared junction
    CHECK(g.var_neighbors(0).size() == 4);
}

TEST_CASE("generators are pure") {
    FamilySpec spec{.kind = FamilyKind::Theta, .a = 6, .b = 6, .c = 4};
    CHECK(families::graph_checksum(families::generate(spec)) ==
          families::graph_checksum(families::generate(spec)));
}

TEST_CASE("fixtures load with their frozen checksums") {
    for (const auto& name : families::fixture_names()) {
        const auto& f = families::fixture(name);
        CHECK(f.name == name);
        CHECK(f.checksum == families::graph_checksum(f.graph));
    }
    CHECK_THROWS_AS((void)families::fixture("fig9"), std::invalid_argument);
}

TEST_CASE("fixture shapes and designated profiles") {
    const auto& fig1 = families::fixture("fig1");
    CHECK(fig1.graph.num_variables() == 4);
    CHECK(fig1.graph.num_checks() == 7);
    CHECK(*tanner::is_absorbing(fig1.graph, fig1.subsets.at("T")) == std::pair<int, int>{4, 2});

    const auto& fig3a = families::fixture("fig3a");
    CHECK(fig3a.graph.num_checks() == 15);
    CHECK(*tanner::is_absorbing(fig3a.graph, fig3a.subsets.at("all")) == std::pair<int, int>{5, 5});

    const auto& fig5 = families::fixture("fig5");
    auto prof = tanner::induced_profile(fig5.graph, fig5.subsets.at("all"));
    CHECK(std::pair{prof.a, prof.b} == std::pair{10, 0});
    CHECK(prof.neighborhood.size() == 25);  // all 25 checks, all even degree
    for (int v = 0; v < 10; ++v) CHECK(fig5.graph.var_neighbors(v).size() == 5);

    const auto& ex7 = families::fixture("ex7_H");
    CHECK(ex7.graph.num_variables() == 11);
    CHECK(ex7.graph.num_checks() == 14);
    CHECK(*tanner::is_absorbing(ex7.graph, ex7.subsets.at("A1")) == std::pair<int, int>{4, 2});
    CHECK(*tanner::is_absorbing(ex7.graph, ex7.subsets.at("A2")) == std::pair<int, int>{4, 2});
    CHECK(*tanner::is_absorbing(ex7.graph, ex7.subsets.at("A3")) == std::pair<int, int>{3, 2});
    CHECK(*tanner::is_absorbing(ex7.graph, ex7.subsets.at("all")) == std::pair<int, int>{11, 0});
}

}  // TEST_SUITE
