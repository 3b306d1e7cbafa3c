#include "qldpc/tanner.hpp"

#include <algorithm>
#include <stdexcept>

namespace qldpc::tanner {

VarSubset::VarSubset(std::vector<int> m) : members(std::move(m)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VarSubset::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

TannerGraph::TannerGraph(int num_variables, std::vector<std::vector<int>> checks)
    : n_(num_variables), checks_(std::move(checks)), vars_(num_variables) {
    if (num_variables < 0) throw std::invalid_argument("negative variable count");
    for (std::size_t j = 0; j < checks_.size(); ++j) {
        auto& nb = checks_[j];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge at check " + std::to_string(j));
        for (int v : nb) {
            if (v < 0 || v >= n_)
                throw std::invalid_argument("variable index out of range at check " + std::to_string(j));
            vars_[v].push_back(static_cast<int>(j));
            ++num_edges_;
        }
    }
}

TannerGraph from_biadjacency(const gf2::BitMatrix& h) {
    std::vector<std::vector<int>> checks(h.rows());
    for (std::size_t j = 0; j < h.rows(); ++j)
        checks[j] = h.row(j).support();
    return TannerGraph(static_cast<int>(h.cols()), std::move(checks));
}

gf2::BitMatrix to_biadjacency(const TannerGraph& g) {
    gf2::BitMatrix h(static_cast<std::size_t>(g.num_checks()),
                     static_cast<std::size_t>(g.num_variables()));
    for (int j = 0; j < g.num_checks(); ++j)
        for (int v : g.check_neighbors(j))
            h.set(static_cast<std::size_t>(j), static_cast<std::size_t>(v), true);
    return h;
}

SubgraphProfile induced_profile(const TannerGraph& g, const VarSubset& s) {
    if (s.empty()) throw std::invalid_argument("induced_profile: empty variable subset");
    for (int v : s.members)
        if (v < 0 || v >= g.num_variables())
            throw std::invalid_argument("induced_profile: variable index out of range");

    SubgraphProfile p;
    p.a = static_cast<int>(s.size());

    std::map<int, int> check_deg;  // induced degree of each check in N(S)
    for (int v : s.members)
        for (int c : g.var_neighbors(v)) ++check_deg[c];

    for (auto [c, d] : check_deg) {
        p.neighborhood.push_back(c);
        (d % 2 ? p.odd_checks : p.even_checks).push_back(c);
    }
    p.b = static_cast<int>(p.odd_checks.size());

    for (int v : s.members) {
        int even = 0, odd = 0;
        for (int c : g.var_neighbors(v)) (check_deg[c] % 2 ? odd : even)++;
        p.var_tallies[v] = {even, odd};
    }
    return p;
}

std::optional<std::pair<int, int>> is_absorbing(const TannerGraph& g, const VarSubset& s) {
    SubgraphProfile p = induced_profile(g, s);
    for (auto& [v, t] : p.var_tallies)
        if (t.first <= t.second) return std::nullopt;
    return std::make_pair(p.a, p.b);
}

bool closure_condition(const TannerGraph& g, const VarSubset& s, const std::set<int>& checks) {
    for (int c : checks) {
        if (c < 0 || c >= g.num_checks())
            throw std::invalid_argument("closure_condition: check index out of range");
        for (int v : g.check_neighbors(c))
            if (!s.contains(v)) return false;
    }
    return true;
}

StructureSummary structure_summary(const TannerGraph& g, const VarSubset& s) {
    SubgraphProfile p = induced_profile(g, s);

    // Node ids in the induced subgraph: variables then checks.
    std::map<int, int> vidx, cidx;
    for (std::size_t i = 0; i < s.members.size(); ++i) vidx[s.members[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < p.neighborhood.size(); ++i)
        cidx[p.neighborhood[i]] = static_cast<int>(s.size() + i);

    int total = static_cast<int>(s.size() + p.neighborhood.size());
    std::vector<std::vector<int>> adj(total);
    int edges = 0;
    for (int v : s.members)
        for (int c : g.var_neighbors(v)) {
            adj[vidx[v]].push_back(cidx[c]);
            adj[cidx[c]].push_back(vidx[v]);
            ++edges;
        }

    StructureSummary out;
    std::vector<char> seen(total, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) { seen[w] = 1; ++reached; stack.push_back(w); }
    }
    out.connected = (reached == total);
    // A connected graph is a tree iff |E| = |V|-1; in general acyclic iff
    // |E| = |V| - #components, which the per-component BFS below checks.
    int components = 0;
    std::fill(seen.begin(), seen.end(), 0);
    for (int start = 0; start < total; ++start) {
        if (seen[start]) continue;
        ++components;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
    }
    out.acyclic = (edges == total - components);

    for (int v : s.members)
        if (adj[vidx[v]].size() == 1) out.leaves.emplace_back('v', v);
    for (int c : p.neighborhood)
        if (adj[cidx[c]].size() == 1) out.leaves.emplace_back('c', c);
    return out;
}

InducedGraph induced_graph(const TannerGraph& g, const VarSubset& s) {
    SubgraphProfile p = induced_profile(g, s);
    std::map<int, int> vidx;
    for (std::size_t i = 0; i < s.members.size(); ++i) vidx[s.members[i]] = static_cast<int>(i);

    InducedGraph out;
    out.var_ids = s.members;
    out.check_ids = p.neighborhood;
    std::vector<std::vector<int>> checks(p.neighborhood.size());
    for (std::size_t j = 0; j < p.neighborhood.size(); ++j)
        for (int v : g.check_neighbors(p.neighborhood[j]))
            if (s.contains(v)) checks[j].push_back(vidx[v]);
    out.graph = TannerGraph(static_cast<int>(s.size()), std::move(checks));
    return out;
}

}  // namespace qldpc::tanner
