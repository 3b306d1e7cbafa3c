#include "qldpc/decoder.hpp"

#include <map>
#include <stdexcept>

namespace qldpc::decoder {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::ExactRecovery: return "ExactRecovery";
        case Outcome::DegenerateRecovery: return "DegenerateRecovery";
        case Outcome::LogicalError: return "LogicalError";
        case Outcome::SyndromeMismatchConverged: return "SyndromeMismatchConverged";
        case Outcome::SyndromeMismatchOscillating: return "SyndromeMismatchOscillating";
    }
    return "?";
}

std::string to_string(StatusKind k) {
    switch (k) {
        case StatusKind::Matched: return "Matched";
        case StatusKind::Oscillating: return "Oscillating";
        case StatusKind::UnmatchedAtMaxIters: return "UnmatchedAtMaxIters";
    }
    return "?";
}

std::pair<int, int> DecodeTrace::terminal_range() const {
    switch (status.kind) {
        case StatusKind::Matched: return {status.at_iteration, 1};
        // The repeated state is the one *produced* by iteration cycle_start, so
        // the first record lying fully inside the periodic orbit is the next one.
        case StatusKind::Oscillating: return {status.cycle_start + 1, status.period};
        case StatusKind::UnmatchedAtMaxIters:
            return {static_cast<int>(iterations.size()) - 1, 1};
    }
    return {0, 1};
}

Syndrome compute_syndrome(const tanner::TannerGraph& g, const ErrorPattern& e) {
    if (e.size() != static_cast<std::size_t>(g.num_variables()))
        throw std::invalid_argument("compute_syndrome: error length != variable count");
    Syndrome s(static_cast<std::size_t>(g.num_checks()));
    for (int j = 0; j < g.num_checks(); ++j) {
        bool parity = false;
        for (int v : g.check_neighbors(j)) parity ^= e.get(static_cast<std::size_t>(v));
        s.set(static_cast<std::size_t>(j), parity);
    }
    return s;
}

namespace {

struct EdgeIndex {
    std::vector<Edge> edges;                     // ordered by (check, var)
    std::vector<std::vector<int>> by_check;      // check -> edge ids
    std::vector<std::vector<int>> by_var;        // var -> edge ids

    explicit EdgeIndex(const tanner::TannerGraph& g)
        : by_check(g.num_checks()), by_var(g.num_variables()) {
        for (int j = 0; j < g.num_checks(); ++j)
            for (int v : g.check_neighbors(j)) {
                int id = static_cast<int>(edges.size());
                edges.push_back({j, v});
                by_check[j].push_back(id);
                by_var[v].push_back(id);
            }
    }
};

bool strict_majority(int ones, int total) { return 2 * ones > total; }

}  // namespace

DecodeTrace gallager_b_decode(const tanner::TannerGraph& g, const Syndrome& sigma,
                              int max_iters) {
    if (sigma.size() != static_cast<std::size_t>(g.num_checks()))
        throw std::invalid_argument("gallager_b_decode: syndrome length != check count");
    if (max_iters < 1)
        throw std::invalid_argument("gallager_b_decode: max_iters must be >= 1");

    EdgeIndex ei(g);
    const std::size_t E = ei.edges.size();
    const std::size_t n = static_cast<std::size_t>(g.num_variables());
    const std::size_t k = static_cast<std::size_t>(g.num_checks());

    DecodeTrace trace;
    IterationRecord init;
    init.var_to_check.assign(E, 0);
    init.check_to_var.assign(E, 0);
    init.estimated_error = gf2::BitVector(n);
    init.estimated_syndrome = gf2::BitVector(k);
    trace.iterations.push_back(init);

    if (!sigma.any()) {
        trace.status = {StatusKind::Matched, 0, -1, 0};
        trace.final_estimate = gf2::BitVector(n);
        return trace;
    }

    std::vector<std::uint8_t> m(E, 0);
    std::map<std::vector<std::uint8_t>, int> seen;
    seen.emplace(m, 0);

    for (int l = 1; l <= max_iters; ++l) {
        IterationRecord rec;
        rec.check_to_var.assign(E, 0);
        for (std::size_t j = 0; j < k; ++j) {
            // XOR over all incoming messages, then strip each edge's own.
            std::uint8_t all = sigma.get(j) ? 1 : 0;
            for (int id : ei.by_check[j]) all ^= m[static_cast<std::size_t>(id)];
            for (int id : ei.by_check[j])
                rec.check_to_var[static_cast<std::size_t>(id)] =
                    all ^ m[static_cast<std::size_t>(id)];
        }

        rec.var_to_check.assign(E, 0);
        rec.estimated_error = gf2::BitVector(n);
        for (std::size_t v = 0; v < n; ++v) {
            int total = static_cast<int>(ei.by_var[v].size());
            int ones = 0;
            for (int id : ei.by_var[v]) ones += rec.check_to_var[static_cast<std::size_t>(id)];
            rec.estimated_error.set(v, strict_majority(ones, total));
            for (int id : ei.by_var[v]) {
                int extr = ones - rec.check_to_var[static_cast<std::size_t>(id)];
                rec.var_to_check[static_cast<std::size_t>(id)] =
                    strict_majority(extr, total - 1) ? 1 : 0;
            }
        }

        rec.estimated_syndrome = gf2::BitVector(k);
        for (std::size_t j = 0; j < k; ++j) {
            std::uint8_t x = 0;
            for (int id : ei.by_check[j]) x ^= rec.var_to_check[static_cast<std::size_t>(id)];
            rec.estimated_syndrome.set(j, x != 0);
        }

        m = rec.var_to_check;
        trace.iterations.push_back(std::move(rec));

        if (trace.iterations.back().estimated_syndrome == sigma) {
            trace.status = {StatusKind::Matched, l, -1, 0};
            trace.final_estimate = trace.iterations.back().estimated_error;
            return trace;
        }
        auto [it, inserted] = seen.emplace(m, l);
        if (!inserted) {
            trace.status = {StatusKind::Oscillating, -1, it->second, l - it->second};
            trace.final_estimate =
                trace.iterations[static_cast<std::size_t>(it->second) + 1].estimated_error;
            return trace;
        }
    }

    trace.status = {StatusKind::UnmatchedAtMaxIters, -1, -1, 0};
    trace.final_estimate = trace.iterations.back().estimated_error;
    return trace;
}

Outcome classify_outcome(const ErrorPattern& e, const DecodeTrace& trace,
                         const gf2::BitMatrix& stabilizers) {
    if (stabilizers.cols() != e.size())
        throw std::invalid_argument("classify_outcome: stabilizer columns != error length");
    if (trace.status.kind == StatusKind::Matched) {
        const auto& ehat = trace.final_estimate;
        if (ehat == e) return Outcome::ExactRecovery;
        if (gf2::rowspace_contains(stabilizers, e ^ ehat)) return Outcome::DegenerateRecovery;
        return Outcome::LogicalError;
    }
    if (trace.status.kind == StatusKind::Oscillating && trace.status.period == 1)
        return Outcome::SyndromeMismatchConverged;
    return Outcome::SyndromeMismatchOscillating;
}

ConvergenceReport convergence_report(const DecodeTrace& trace, const ErrorPattern& e,
                                     const Syndrome& sigma) {
    (void)e;  // convergence is judged on the estimate trajectory alone
    ConvergenceReport out;
    auto [start, count] = trace.terminal_range();
    const auto& first = trace.iterations[static_cast<std::size_t>(start)];

    for (std::size_t v = 0; v < first.estimated_error.size(); ++v) {
        bool varies = false;
        for (int t = 1; t < count; ++t)
            if (trace.iterations[static_cast<std::size_t>(start + t)].estimated_error.get(v) !=
                first.estimated_error.get(v)) { varies = true; break; }
        if (varies) out.vars_not_converged.push_back(static_cast<int>(v));
    }
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        bool mismatch = false;
        for (int t = 0; t < count; ++t)
            if (trace.iterations[static_cast<std::size_t>(start + t)].estimated_syndrome.get(j) !=
                sigma.get(j)) { mismatch = true; break; }
        if (mismatch) out.checks_not_matched.push_back(static_cast<int>(j));
    }
    return out;
}

}  // namespace qldpc::decoder
