#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qldpc/decoder.hpp"
#include "qldpc/gf2.hpp"
#include "qldpc/tanner.hpp"

// Enumeration and certification of decoder-failure structures: failure-
// inducing sets, trapping sets, absorbing-set censuses, symmetric stabilizers
// and the graph-decomposition certificates. Enumeration order is
// weight-ascending, then lexicographic over variable indices, so every census
// is reproducible run to run. Censuses shard the subset space over worker
// threads and merge results back in enumeration order.
namespace qldpc::structures {

struct FailureEntry {
    tanner::VarSubset set;
    decoder::Outcome outcome;
    decoder::ConvergenceReport report;
};

struct FailureCensus {
    int w_max = 0;
    std::vector<FailureEntry> failures;
    // Smallest failure size over the tested range; absent when no failure was
    // found, in which case the only sound claim is "greater than w_max".
    std::optional<int> critical_number;
    int strength = 0;  // number of failures of the critical size
};

// Exhaustively decodes every error pattern of weight 1..w_max and collects
// those that end in anything other than exact or degenerate recovery.
FailureCensus census_failure_inducing(const tanner::TannerGraph& g,
                                      const gf2::BitMatrix& stabilizers, int w_max);

// First failure-inducing subset of T (weight <= w_max, weight-then-lex order),
// decoding on the host graph with the error support restricted to T.
std::optional<tanner::VarSubset> is_trapping_set(const tanner::TannerGraph& g,
                                                 const tanner::VarSubset& t,
                                                 const gf2::BitMatrix& stabilizers,
                                                 int w_max);

struct AbsorbingEntry {
    tanner::VarSubset set;
    std::pair<int, int> profile;  // (a, b)
};

// All absorbing sets of size 1..a_max, exhaustively.
std::vector<AbsorbingEntry> census_absorbing(const tanner::TannerGraph& g, int a_max);

enum class CertKind {
    Thm1_OddChecks,
    Thm2_Rowspace,
    Thm6_PartitionUnion,
    Thm7_EmbeddedUnion,
    Thm8_SinglePath,
    Thm9_MultiPath,
    Thm10_Tree,
    Thm11_MultiTree,
    Thm12_MultiPartition,
    SymmetricStabilizer,
};

std::string to_string(CertKind k);

struct Certificate {
    CertKind kind;
    std::vector<tanner::VarSubset> parts;
    // Checks the certificate pins down as permanently mismatched when the
    // first part is in error (empty when the certificate predicts a matched
    // syndrome, as the rowspace dichotomy does).
    std::vector<int> designated_checks;
    // Acyclic connector components (checks / interior variables) discovered
    // between the parts, each including its leaf variables inside the parts.
    std::vector<std::vector<int>> connector_checks;
    std::vector<std::vector<int>> connector_vars;
    std::string detail;
};

// Searches for a partition of S into an even number (2, then 4) of equal-size
// parts whose induced subgraphs are pairwise isomorphic and share one odd-check
// set, with the whole of S having no odd-degree checks.
std::optional<Certificate> check_symmetric_stabilizer(const tanner::TannerGraph& g,
                                                      const tanner::VarSubset& s);

// A partition of S into `parts` disjoint absorbing sets, if one exists. When
// parts == 2 and S itself has no odd checks, the returned halves are verified
// to share the same odd-check set with equal b (a structural necessity).
std::optional<std::vector<tanner::VarSubset>> partition_into_absorbing(
    const tanner::TannerGraph& g, const tanner::VarSubset& s, int parts);

// Mechanically checks the decomposition-based failure certificates for a1
// against the other listed parts (or a1 alone) and cross-validates each
// emitted certificate by decoding a1's syndrome on the host graph.
std::vector<Certificate> certify(const tanner::TannerGraph& g, const tanner::VarSubset& a1,
                                 const std::vector<tanner::VarSubset>& other_parts);

}  // namespace qldpc::structures
