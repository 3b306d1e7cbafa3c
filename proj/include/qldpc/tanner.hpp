#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qldpc/gf2.hpp"

// Bipartite Tanner graphs, induced subgraphs and degree/parity profiles.
// Graphs are immutable after construction; all queries are pure.
namespace qldpc::tanner {

// A set of variable-node indices, kept sorted and duplicate-free.
struct VarSubset {
    std::vector<int> members;

    VarSubset() = default;
    explicit VarSubset(std::vector<int> m);
    VarSubset(std::initializer_list<int> m) : VarSubset(std::vector<int>(m)) {}

    bool empty() const { return members.empty(); }
    std::size_t size() const { return members.size(); }
    bool contains(int v) const;

    gf2::BitVector indicator(std::size_t n) const {
        return gf2::BitVector::from_support(n, members);
    }

    bool operator==(const VarSubset& o) const = default;
    auto operator<=>(const VarSubset& o) const = default;
};

class TannerGraph {
public:
    TannerGraph() = default;
    // `checks[j]` lists the variable neighbors of check j. Duplicate edges
    // and out-of-range indices are rejected.
    TannerGraph(int num_variables, std::vector<std::vector<int>> checks);

    int num_variables() const { return n_; }
    int num_checks() const { return static_cast<int>(checks_.size()); }

    const std::vector<int>& check_neighbors(int c) const { return checks_[c]; }
    const std::vector<int>& var_neighbors(int v) const { return vars_[v]; }
    int num_edges() const { return num_edges_; }

private:
    int n_ = 0;
    int num_edges_ = 0;
    std::vector<std::vector<int>> checks_;
    std::vector<std::vector<int>> vars_;
};

TannerGraph from_biadjacency(const gf2::BitMatrix& h);
gf2::BitMatrix to_biadjacency(const TannerGraph& g);

// Degree/parity data of the subgraph induced by S together with its check
// neighborhood N(S). Degrees are counted inside the induced subgraph; the
// host graph only matters for closure_condition below.
struct SubgraphProfile {
    int a = 0;                                  // |S|
    int b = 0;                                  // |odd_checks|
    std::vector<int> neighborhood;              // N(S), ascending
    std::vector<int> odd_checks;                // checks of odd induced degree
    std::vector<int> even_checks;               // checks of even induced degree
    // v -> (even-degree neighbor count, odd-degree neighbor count) in G_S.
    std::map<int, std::pair<int, int>> var_tallies;
};

// Throws std::invalid_argument on an empty subset or out-of-range members.
SubgraphProfile induced_profile(const TannerGraph& g, const VarSubset& s);

// (a,b) iff every v in S has strictly more even- than odd-degree check
// neighbors in the induced subgraph; std::nullopt otherwise.
std::optional<std::pair<int, int>> is_absorbing(const TannerGraph& g, const VarSubset& s);

// True iff every listed check has all of its host-graph neighbors inside S.
bool closure_condition(const TannerGraph& g, const VarSubset& s, const std::set<int>& checks);

struct StructureSummary {
    bool connected = false;
    bool acyclic = false;
    // Degree-1 nodes of the induced subgraph: ('v', index) or ('c', index).
    std::vector<std::pair<char, int>> leaves;
};

StructureSummary structure_summary(const TannerGraph& g, const VarSubset& s);

// The induced subgraph as a standalone Tanner graph. Variables are re-indexed
// in ascending member order; `check_ids` maps its checks back to host indices.
struct InducedGraph {
    TannerGraph graph;
    std::vector<int> var_ids;
    std::vector<int> check_ids;
};
InducedGraph induced_graph(const TannerGraph& g, const VarSubset& s);

}  // namespace qldpc::tanner
