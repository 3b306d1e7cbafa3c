#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qldpc/gf2.hpp"
#include "qldpc/tanner.hpp"

// Syndrome-based hard-decision iterative decoder (Gallager B) with full trace
// capture. Message schedule is flooding: every check updates from the previous
// round's variable messages, then every variable updates. Per iteration l >= 1:
//
//   check -> var:   u[c->v] = sigma_c XOR (XOR of incoming m[v'->c], v' != v)
//   var -> check:   m[v->c] = majority of {u[c'->v] : c' != c}, ties -> 0
//   error estimate: ehat_v  = majority over all u[c->v], ties -> 0
//   syndrome est.:  shat_c  = XOR of the fresh m[v->c] over v in N(c)
//
// Iteration 0 is the initial all-zero estimate (shat = 0). Decoding halts at
// the first iteration whose shat equals the input syndrome bitwise. The full
// variable-to-check message state is recorded each round; a repeated state is
// an exact cycle (period 1 = converged to a fixed point, period > 1 =
// oscillation), so every run terminates.
namespace qldpc::decoder {

using ErrorPattern = gf2::BitVector;  // length = number of variables
using Syndrome = gf2::BitVector;      // length = number of checks

struct IterationRecord {
    // Messages indexed by edge id; edges are ordered by (check, variable).
    std::vector<std::uint8_t> var_to_check;
    std::vector<std::uint8_t> check_to_var;
    gf2::BitVector estimated_error;
    gf2::BitVector estimated_syndrome;
};

enum class StatusKind { Matched, Oscillating, UnmatchedAtMaxIters };

struct Status {
    StatusKind kind = StatusKind::UnmatchedAtMaxIters;
    int at_iteration = -1;  // Matched only
    int cycle_start = -1;   // Oscillating only
    int period = 0;         // Oscillating only
};

struct DecodeTrace {
    std::vector<IterationRecord> iterations;  // index = iteration number
    Status status;
    gf2::BitVector final_estimate;

    // Iterations forming the terminal behavior: the match iteration alone, or
    // one full cycle starting at cycle_start, or the last recorded iteration.
    std::pair<int, int> terminal_range() const;  // (first iteration, count)
};

struct Edge { int check; int var; };

// sigma_j = parity of errored neighbors of check j.
Syndrome compute_syndrome(const tanner::TannerGraph& g, const ErrorPattern& e);

DecodeTrace gallager_b_decode(const tanner::TannerGraph& g, const Syndrome& sigma,
                              int max_iters = 100);

enum class Outcome {
    ExactRecovery,
    DegenerateRecovery,
    LogicalError,
    SyndromeMismatchConverged,
    SyndromeMismatchOscillating,
};

std::string to_string(Outcome o);
std::string to_string(StatusKind k);

// Matched & ehat == e           -> ExactRecovery
// Matched & e^ehat in rowspace  -> DegenerateRecovery
// Matched otherwise             -> LogicalError
// Unmatched, fixed point        -> SyndromeMismatchConverged
// Unmatched otherwise           -> SyndromeMismatchOscillating
Outcome classify_outcome(const ErrorPattern& e, const DecodeTrace& trace,
                         const gf2::BitMatrix& stabilizers);

struct ConvergenceReport {
    std::vector<int> vars_not_converged;   // estimate varies over terminal cycle
    std::vector<int> checks_not_matched;   // shat_c != sigma_c somewhere in it
};

ConvergenceReport convergence_report(const DecodeTrace& trace, const ErrorPattern& e,
                                     const Syndrome& sigma);

}  // namespace qldpc::decoder
