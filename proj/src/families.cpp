#include "qldpc/families.hpp"

#include <mutex>
#include <stdexcept>

namespace qldpc::families {

namespace {

using Checks = std::vector<std::vector<int>>;

void require(bool ok, const char* constraint) {
    if (!ok) throw std::invalid_argument(std::string("family parameter rejected: ") + constraint);
}

tanner::TannerGraph make_path(int a) {
    require(a >= 2, "path requires a >= 2");
    Checks ch;
    for (int i = 0; i + 1 < a; ++i) ch.push_back({i, i + 1});
    return {a, std::move(ch)};
}

tanner::TannerGraph make_cycle(int a) {
    require(a >= 2, "cycle requires a >= 2");
    Checks ch;
    for (int i = 0; i < a; ++i) ch.push_back({i, (i + 1) % a});
    return {a, std::move(ch)};
}

// Three disjoint paths of even edge lengths between two junction variables
// (ids 0 and 1). Interior nodes alternate check, variable, check, ...
tanner::TannerGraph theta_junction_vars(int a, int b, int c) {
    for (int len : {a, b, c}) {
        require(len >= 2, "theta path length must be >= 2");
        require(len % 2 == 0,
                "theta path between variable junctions must have even edge length");
    }
    Checks ch;
    int next_var = 2;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int step = 0; step < len / 2; ++step) {
            int nxt = (step == len / 2 - 1) ? 1 : next_var++;
            ch.push_back({prev, nxt});
            prev = nxt;
        }
    }
    return {next_var, std::move(ch)};
}

// Junctions are checks (ids 0 and 1); paths alternate variable, check, ...
tanner::TannerGraph theta_junction_checks(int a, int b, int c) {
    for (int len : {a, b, c}) {
        require(len >= 2, "theta path length must be >= 2");
        require(len % 2 == 0,
                "theta path between check junctions must have even edge length");
    }
    std::map<int, std::vector<int>> checks;  // check id -> vars
    checks[0] = {};
    checks[1] = {};
    int next_var = 0, next_check = 2;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int step = 0; step < len / 2; ++step) {
            int v = next_var++;
            checks[prev].push_back(v);
            int nxt = (step == len / 2 - 1) ? 1 : next_check++;
            checks[nxt];  // materialize
            checks[nxt].push_back(v);
            prev = nxt;
        }
    }
    Checks ch;
    for (auto& [id, vars] : checks) ch.push_back(vars);
    return {next_var, std::move(ch)};
}

tanner::TannerGraph make_dumbbell(int a1, int a2, int b) {
    require(a1 >= 4 && a1 % 2 == 0, "dumbbell cycle length must be even and >= 4");
    require(a2 >= 4 && a2 % 2 == 0, "dumbbell cycle length must be even and >= 4");
    require(b >= 0 && b % 2 == 0,
            "dumbbell path between variable junctions must have even edge length");
    int n1 = a1 / 2, n2 = a2 / 2;
    Checks ch;
    if (b == 0) {
        // Cycles share their junction variable (id 0).
        for (int i = 0; i < n1; ++i) ch.push_back({i, (i + 1) % n1});
        auto second = [&](int i) { return i == 0 ? 0 : n1 + i - 1; };
        for (int i = 0; i < n2; ++i) ch.push_back({second(i), second((i + 1) % n2)});
        return {n1 + n2 - 1, std::move(ch)};
    }
    for (int i = 0; i < n1; ++i) ch.push_back({i, (i + 1) % n1});
    for (int i = 0; i < n2; ++i) ch.push_back({n1 + i, n1 + (i + 1) % n2});
    int next_var = n1 + n2;
    int prev = 0;  // junction in the first cycle
    for (int step = 0; step < b / 2; ++step) {
        int nxt = (step == b / 2 - 1) ? n1 : next_var++;
        ch.push_back({prev, nxt});
        prev = nxt;
    }
    return {next_var, std::move(ch)};
}

}  // namespace

tanner::TannerGraph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Path: return make_path(spec.a);
        case FamilyKind::Cycle: return make_cycle(spec.a);
        case FamilyKind::Theta:
            return spec.variant == ThetaVariant::JunctionsVariables
                       ? theta_junction_vars(spec.a, spec.b, spec.c)
                       : theta_junction_checks(spec.a, spec.b, spec.c);
        case FamilyKind::Dumbbell: return make_dumbbell(spec.a1, spec.a2, spec.b);
    }
    throw std::invalid_argument("unknown family kind");
}

std::uint64_t graph_checksum(const tanner::TannerGraph& g) {
    std::string s = "n=" + std::to_string(g.num_variables()) +
                    ";k=" + std::to_string(g.num_checks()) + ";";
    for (int j = 0; j < g.num_checks(); ++j) {
        s += std::to_string(j) + ":";
        bool first = true;
        for (int v : g.check_neighbors(j)) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        s += ";";
    }
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

Fixture build_fixture(const std::string& name, int n, Checks checks,
                      std::map<std::string, tanner::VarSubset> subsets,
                      std::uint64_t expected_checksum) {
    Fixture f;
    f.name = name;
    f.graph = tanner::TannerGraph(n, std::move(checks));
    f.subsets = std::move(subsets);
    f.checksum = graph_checksum(f.graph);
    if (expected_checksum != 0 && f.checksum != expected_checksum)
        throw std::logic_error("fixture edge list corrupted: " + name);
    return f;
}

std::map<std::string, Fixture> build_all() {
    std::map<std::string, Fixture> out;

    // 4 variables, 7 checks; whole set is the designated (4,2) structure.
    out["fig1"] = build_fixture(
        "fig1", 4,
        {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1}, {0, 2}, {3}},
        {{"T", tanner::VarSubset{0, 1, 2, 3}}},
        0xe6c539a11276dce7ull);

    // 5 variables, 9 checks; F is the unique low-weight failure-inducing set.
    out["fig2a"] = build_fixture(
        "fig2a", 5,
        {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 4}, {4}, {1}, {3}},
        {{"F", tanner::VarSubset{1, 3, 4}},
         {"all", tanner::VarSubset{0, 1, 2, 3, 4}}},
        0x86b2c782074e897bull);

    // 5 variables, 15 checks: one degree-1 check per variable, plus all ten
    // variable pairs joined by degree-2 checks.
    out["fig3a"] = build_fixture(
        "fig3a", 5,
        {{0}, {1}, {2}, {3}, {4},
         {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
         {0, 2}, {1, 3}, {4, 2}, {0, 3}, {1, 4}},
        {{"all", tanner::VarSubset{0, 1, 2, 3, 4}}},
        0x86e0aafe483c5170ull);

    // 10 variables, 25 degree-2 checks; every variable has degree 5.
    out["fig5"] = build_fixture(
        "fig5", 10,
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 0},
         {0, 7}, {0, 3}, {2, 9}, {2, 5}, {4, 1}, {4, 7}, {6, 3}, {6, 9}, {8, 5}, {8, 1},
         {0, 5}, {2, 7}, {4, 9}, {1, 6}, {3, 8}},
        {{"all", tanner::VarSubset{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}},
        0xee1941aa1c52e32eull);

    // 8 variables, 10 checks; two designated 4-variable constituents.
    out["fig6"] = build_fixture(
        "fig6", 8,
        {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 5}, {5, 6}, {6, 7}},
        {{"A1", tanner::VarSubset{0, 1, 4, 5}},
         {"A2", tanner::VarSubset{2, 3, 6, 7}},
         {"all", tanner::VarSubset{0, 1, 2, 3, 4, 5, 6, 7}}},
        0x1dc03a4dd4746018ull);

    // 14x11 parity-check matrix, stored row by row as the checks of its
    // Tanner graph; three designated absorbing subsets partition the columns.
    out["ex7_H"] = build_fixture(
        "ex7_H", 11,
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10},
         {0, 10}, {1, 9}, {2, 5}, {6, 8}},
        {{"A1", tanner::VarSubset{0, 1, 9, 10}},
         {"A2", tanner::VarSubset{2, 3, 4, 5}},
         {"A3", tanner::VarSubset{6, 7, 8}},
         {"all", tanner::VarSubset{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}},
        0x7c5ddba664a9e1b5ull);

    return out;
}

}  // namespace

const Fixture& fixture(const std::string& name) {
    static std::map<std::string, Fixture> all = build_all();
    auto it = all.find(name);
    if (it == all.end()) throw std::invalid_argument("unknown fixture: " + name);
    return it->second;
}

std::vector<std::string> fixture_names() {
    return {"fig1", "fig2a", "fig3a", "fig5", "fig6", "ex7_H"};
}

}  // namespace qldpc::families
