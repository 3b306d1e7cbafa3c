#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qldpc/tanner.hpp"

// Deterministic generators for the path / cycle / theta / dumbbell families
// and the named study fixtures. Same spec -> identical graph, always.
namespace qldpc::families {

enum class FamilyKind { Path, Cycle, Theta, Dumbbell };

enum class ThetaVariant { JunctionsVariables, JunctionsChecks };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    // Path/Cycle: a = variable count (path has a-1 checks, cycle has a).
    int a = 0;
    // Theta: edge lengths of the three junction-to-junction paths (a, b, c).
    int b = 0;
    int c = 0;
    ThetaVariant variant = ThetaVariant::JunctionsVariables;
    // Dumbbell: cycle edge lengths a1, a2 joined by a path of edge length b,
    // meeting each cycle at a variable node (b = 0 merges the two junctions).
    int a1 = 0;
    int a2 = 0;
};

// Canonical labelings:
//   Path:  v1 c1 v2 c2 ... c_{a-1} v_a (variables first, 0-based ids).
//   Cycle: v_i c_i alternating, c_i = (v_i, v_{i+1 mod a}).
//   Theta: two degree-3 junctions joined by three disjoint alternating paths;
//          all three edge lengths must be even (bipartite alternation).
//   Dumbbell: two cycles, then the connecting path.
// Illegal parameters/parities are rejected with the violated constraint named.
tanner::TannerGraph generate(const FamilySpec& spec);

struct Fixture {
    std::string name;
    tanner::TannerGraph graph;
    std::map<std::string, tanner::VarSubset> subsets;  // named designated sets
    std::uint64_t checksum = 0;                        // FNV-1a of the edge list
};

// name in {fig1, fig2a, fig3a, fig5, fig6, ex7_H}; unknown names are rejected.
const Fixture& fixture(const std::string& name);

std::vector<std::string> fixture_names();

// FNV-1a 64 over the canonical "n=..;k=..;c:v,v;..." rendering of a graph;
// fixture edge lists are pinned to frozen values of this at load time.
std::uint64_t graph_checksum(const tanner::TannerGraph& g);

}  // namespace qldpc::families
