#include "qldpc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "qldpc/css.hpp"
#include "qldpc/decoder.hpp"
#include "qldpc/families.hpp"
#include "qldpc/structures.hpp"
#include "qldpc/tanner.hpp"

namespace qldpc::cli {

namespace {

// ---------------------------------------------------------------- alist ----

struct TokenStream {
    std::vector<std::pair<int, long>> tokens;  // (line number, value)
    std::size_t pos = 0;

    explicit TokenStream(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) {
                try {
                    std::size_t used = 0;
                    long v = std::stol(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                    tokens.emplace_back(lineno, v);
                } catch (const std::exception&) {
                    throw AlistError("alist parse error at line " + std::to_string(lineno) +
                                     ": non-integer token '" + tok + "'");
                }
            }
        }
    }

    long next(const char* what) {
        if (pos >= tokens.size())
            throw AlistError(std::string("alist parse error: file ends before ") + what);
        return tokens[pos++].second;
    }
    int line() const {
        return pos == 0 ? 1 : tokens[std::min(pos, tokens.size()) - 1].first;
    }
};

}  // namespace

gf2::BitMatrix parse_alist(const std::string& text) {
    TokenStream ts(text);
    auto expect_range = [&](long v, long lo, long hi, const char* what) {
        if (v < lo || v > hi)
            throw AlistError("alist parse error at line " + std::to_string(ts.line()) + ": " +
                             what + " out of range (" + std::to_string(v) + ")");
        return static_cast<int>(v);
    };

    int n = expect_range(ts.next("column count"), 1, 1 << 20, "column count");
    int m = expect_range(ts.next("row count"), 1, 1 << 20, "row count");
    int max_col = expect_range(ts.next("max column degree"), 0, m, "max column degree");
    int max_row = expect_range(ts.next("max row degree"), 0, n, "max row degree");

    std::vector<int> col_deg(static_cast<std::size_t>(n)), row_deg(static_cast<std::size_t>(m));
    for (int j = 0; j < n; ++j)
        col_deg[static_cast<std::size_t>(j)] =
            expect_range(ts.next("column degree"), 0, max_col, "column degree");
    for (int i = 0; i < m; ++i)
        row_deg[static_cast<std::size_t>(i)] =
            expect_range(ts.next("row degree"), 0, max_row, "row degree");

    gf2::BitMatrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < max_col; ++k) {
            int r = expect_range(ts.next("column neighbor"), 0, m, "column neighbor index");
            bool padding = (r == 0);
            if (padding) {
                if (k < col_deg[static_cast<std::size_t>(j)])
                    throw AlistError("alist parse error at line " + std::to_string(ts.line()) +
                                     ": zero entry before declared column degree was met");
                continue;
            }
            if (k >= col_deg[static_cast<std::size_t>(j)])
                throw AlistError("alist parse error at line " + std::to_string(ts.line()) +
                                 ": more column neighbors than the declared degree");
            h.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(j), true);
        }
    }
    for (int i = 0; i < m; ++i) {
        int listed = 0;
        for (int k = 0; k < max_row; ++k) {
            int c = expect_range(ts.next("row neighbor"), 0, n, "row neighbor index");
            if (c == 0) continue;
            ++listed;
            if (!h.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c - 1)))
                throw AlistError("alist parse error at line " + std::to_string(ts.line()) +
                                 ": row list names an entry absent from the column lists");
        }
        if (listed != row_deg[static_cast<std::size_t>(i)])
            throw AlistError("alist parse error at line " + std::to_string(ts.line()) +
                             ": row " + std::to_string(i + 1) + " lists " +
                             std::to_string(listed) + " neighbors, declared " +
                             std::to_string(row_deg[static_cast<std::size_t>(i)]));
    }
    // Cross-check column degrees against the assembled matrix.
    for (int j = 0; j < n; ++j) {
        int d = 0;
        for (int i = 0; i < m; ++i)
            if (h.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) ++d;
        if (d != col_deg[static_cast<std::size_t>(j)])
            throw AlistError("alist parse error: column " + std::to_string(j + 1) +
                             " degree mismatch");
    }
    return h;
}

std::string write_alist(const gf2::BitMatrix& h) {
    const auto m = h.rows(), n = h.cols();
    std::vector<std::vector<int>> cols(n), rows(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.at(i, j)) {
                cols[j].push_back(static_cast<int>(i) + 1);
                rows[i].push_back(static_cast<int>(j) + 1);
            }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& c : cols) max_col = std::max(max_col, c.size());
    for (const auto& r : rows) max_row = std::max(max_row, r.size());

    std::ostringstream out;
    out << n << " " << m << "\n" << max_col << " " << max_row << "\n";
    auto write_degrees = [&](const std::vector<std::vector<int>>& lists) {
        for (std::size_t i = 0; i < lists.size(); ++i)
            out << (i ? " " : "") << lists[i].size();
        out << "\n";
    };
    auto write_lists = [&](const std::vector<std::vector<int>>& lists, std::size_t width) {
        for (const auto& l : lists) {
            for (std::size_t k = 0; k < width; ++k)
                out << (k ? " " : "") << (k < l.size() ? l[k] : 0);
            out << "\n";
        }
    };
    write_degrees(cols);
    write_degrees(rows);
    write_lists(cols, max_col);
    write_lists(rows, max_row);
    return out.str();
}

namespace {

// -------------------------------------------------------------- reports ----

std::string hex64(std::uint64_t v) {
    std::ostringstream o;
    o << "0x" << std::hex << v;
    return o.str();
}

std::string support_str(const std::vector<int>& support, char prefix) {
    std::string s = "{";
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i) s += ",";
        s += prefix + std::to_string(support[i] + 1);
    }
    return s + "}";
}

std::string support_str(const gf2::BitVector& v, char prefix) {
    return support_str(v.support(), prefix);
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += " ";
        s += args[i];
    }
    return s;
}

struct InputGraph {
    tanner::TannerGraph graph;
    std::string descriptor;      // "fixture fig2a" or "alist <path>"
    std::uint64_t checksum = 0;
    const families::Fixture* fix = nullptr;  // when loaded from a fixture
};

gf2::BitMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open alist file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_alist(buf.str());
}

InputGraph load_graph(const std::string& fixture_name, const std::string& alist_path) {
    if (!fixture_name.empty() && !alist_path.empty())
        throw std::invalid_argument("give either --fixture or --alist, not both");
    InputGraph g;
    if (!fixture_name.empty()) {
        const auto& f = families::fixture(fixture_name);
        g.graph = f.graph;
        g.descriptor = "fixture " + f.name;
        g.checksum = f.checksum;
        g.fix = &f;
    } else if (!alist_path.empty()) {
        g.graph = tanner::from_biadjacency(read_alist_file(alist_path));
        g.descriptor = "alist " + alist_path;
        g.checksum = families::graph_checksum(g.graph);
    } else {
        throw std::invalid_argument("a graph source is required (--fixture or --alist)");
    }
    return g;
}

// Matrix source for hgp: fixture name (with or without the _H suffix) or a
// path to an alist file.
gf2::BitMatrix load_matrix(const std::string& src, std::string& descriptor) {
    auto names = families::fixture_names();
    for (const auto& n : names)
        if (src == n || src + "_H" == n) {
            descriptor = "fixture " + n;
            return tanner::to_biadjacency(families::fixture(n).graph);
        }
    descriptor = "alist " + src;
    return read_alist_file(src);
}

// Error/variable-set specs: "v1,v3" or "1,3" (1-based), or a named subset of
// the current fixture.
tanner::VarSubset parse_var_spec(const std::string& spec, const InputGraph& g) {
    if (g.fix) {
        auto it = g.fix->subsets.find(spec);
        if (it != g.fix->subsets.end()) return it->second;
    }
    std::vector<int> vars;
    std::string tok;
    std::istringstream in(spec);
    while (std::getline(in, tok, ',')) {
        if (!tok.empty() && (tok[0] == 'v' || tok[0] == 'V')) tok = tok.substr(1);
        try {
            std::size_t used = 0;
            int one_based = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            if (one_based < 1 || one_based > g.graph.num_variables())
                throw std::out_of_range(tok);
            vars.push_back(one_based - 1);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad variable list '" + spec +
                                        "': expected names like v1,v4 within range");
        }
    }
    if (vars.empty()) throw std::invalid_argument("empty variable list: '" + spec + "'");
    return tanner::VarSubset(vars);
}

gf2::BitVector parse_bits(const std::string& s, std::size_t expected, const char* what) {
    auto v = gf2::BitVector::from_string(s);
    if (v.size() != expected)
        throw std::invalid_argument(std::string(what) + " has length " +
                                    std::to_string(v.size()) + ", expected " +
                                    std::to_string(expected));
    return v;
}

void emit_header(std::ostream& out, const char* kind, const InputGraph& g,
                 const std::vector<std::string>& args) {
    out << "report: " << kind << "\n";
    out << "tool: " << kToolVersion << "\n";
    out << "command: " << join_args(args) << "\n";
    out << "input: " << g.descriptor << "\n";
    out << "input_checksum: " << hex64(g.checksum) << "\n";
}

void emit_trace_block(std::ostream& out, const tanner::TannerGraph& g,
                      const decoder::DecodeTrace& trace, bool full) {
    auto [first, count] = trace.terminal_range();
    int lo = full ? 0 : first;
    int hi = full ? static_cast<int>(trace.iterations.size()) : first + count;
    for (int i = lo; i < hi; ++i) {
        const auto& rec = trace.iterations[static_cast<std::size_t>(i)];
        out << "iteration " << i << ": estimated_syndrome="
            << rec.estimated_syndrome.to_string()
            << " estimated_error=" << support_str(rec.estimated_error, 'v');
        if (full) {
            out << " var_to_check=";
            for (auto b : rec.var_to_check) out << int(b);
        }
        out << "\n";
    }
}

// -------------------------------------------------------- subcommand state --

struct Options {
    std::string fixture, alist, out_path;
    // decode
    std::string error_spec, error_bits, syndrome_bits, stabilizers_path;
    int max_iters = 100;
    bool trace = false;
    // census
    int fis_weight = 0, abs_size = 0;
    // certify
    std::string a1_spec;
    std::vector<std::string> part_specs;
    // hgp
    std::string h1_src, h2_src;
    // generate
    std::string family, variant = "vars";
    int a = 0, b = 0, c = 0, a1 = 0, a2 = 0;
};

gf2::BitMatrix stabilizer_matrix(const Options& opt, const InputGraph& g) {
    if (opt.stabilizers_path.empty()) return tanner::to_biadjacency(g.graph);
    auto s = read_alist_file(opt.stabilizers_path);
    if (s.cols() != static_cast<std::size_t>(g.graph.num_variables()))
        throw std::invalid_argument("stabilizer matrix column count disagrees with the graph");
    return s;
}

void run_decode(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
    auto g = load_graph(opt.fixture, opt.alist);
    const auto n = static_cast<std::size_t>(g.graph.num_variables());
    const auto k = static_cast<std::size_t>(g.graph.num_checks());

    std::optional<gf2::BitVector> e;
    gf2::BitVector sigma;
    int sources = !opt.error_spec.empty() + !opt.error_bits.empty() + !opt.syndrome_bits.empty();
    if (sources != 1)
        throw std::invalid_argument("decode needs exactly one of --error, --error-bits, --syndrome");
    if (!opt.error_spec.empty()) e = parse_var_spec(opt.error_spec, g).indicator(n);
    if (!opt.error_bits.empty()) e = parse_bits(opt.error_bits, n, "--error-bits");
    if (e) sigma = decoder::compute_syndrome(g.graph, *e);
    else sigma = parse_bits(opt.syndrome_bits, k, "--syndrome");
    if (opt.max_iters < 1) throw std::invalid_argument("--max-iters must be positive");

    auto trace = decoder::gallager_b_decode(g.graph, sigma, opt.max_iters);

    emit_header(out, "decode", g, args);
    if (e) {
        out << "error_bits: " << e->to_string() << "\n";
        out << "error_support: " << support_str(*e, 'v') << "\n";
    }
    out << "syndrome_bits: " << sigma.to_string() << "\n";
    out << "syndrome_support: " << support_str(sigma, 'c') << "\n";
    out << "status: " << decoder::to_string(trace.status.kind);
    if (trace.status.kind == decoder::StatusKind::Matched)
        out << " at_iteration=" << trace.status.at_iteration;
    else if (trace.status.kind == decoder::StatusKind::Oscillating)
        out << " cycle_start=" << trace.status.cycle_start << " period=" << trace.status.period;
    out << "\n";

    const auto& last = trace.iterations[static_cast<std::size_t>(trace.terminal_range().first)];
    out << "estimated_syndrome_bits: " << last.estimated_syndrome.to_string() << "\n";
    out << "estimated_error_bits: " << trace.final_estimate.to_string() << "\n";
    out << "estimated_error_support: " << support_str(trace.final_estimate, 'v') << "\n";
    if (e) {
        auto outcome = decoder::classify_outcome(*e, trace, stabilizer_matrix(opt, g));
        out << "outcome: " << decoder::to_string(outcome) << "\n";
        auto rep = decoder::convergence_report(trace, *e, sigma);
        out << "vars_not_converged: " << support_str(rep.vars_not_converged, 'v') << "\n";
        out << "checks_not_matched: " << support_str(rep.checks_not_matched, 'c') << "\n";
    }
    if (trace.status.kind != decoder::StatusKind::Matched || opt.trace) {
        out << (opt.trace ? "trace:\n" : "terminal_cycle:\n");
        emit_trace_block(out, g.graph, trace, opt.trace);
    }
}

void run_census(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
    auto g = load_graph(opt.fixture, opt.alist);
    if (opt.fis_weight <= 0 && opt.abs_size <= 0)
        throw std::invalid_argument("census needs --fis-weight and/or --abs-size");

    emit_header(out, "census", g, args);
    if (opt.fis_weight > 0) {
        auto census =
            structures::census_failure_inducing(g.graph, stabilizer_matrix(opt, g), opt.fis_weight);
        out << "fis_weight_bound: " << census.w_max << "\n";
        out << "failure_inducing_count: " << census.failures.size() << "\n";
        for (const auto& f : census.failures) {
            out << "failure: set=" << support_str(f.set.members, 'v')
                << " outcome=" << decoder::to_string(f.outcome)
                << " vars_not_converged=" << support_str(f.report.vars_not_converged, 'v')
                << " checks_not_matched=" << support_str(f.report.checks_not_matched, 'c')
                << "\n";
        }
        if (census.critical_number) {
            out << "critical_number: " << *census.critical_number << "\n";
            out << "strength: " << census.strength << "\n";
        } else {
            out << "critical_number: > " << census.w_max << "\n";
            out << "note: no failure-inducing sets <= w_max\n";
        }
    }
    if (opt.abs_size > 0) {
        auto absorbing = structures::census_absorbing(g.graph, opt.abs_size);
        out << "abs_size_bound: " << opt.abs_size << "\n";
        out << "absorbing_count: " << absorbing.size() << "\n";
        for (const auto& a : absorbing)
            out << "absorbing: set=" << support_str(a.set.members, 'v') << " profile=("
                << a.profile.first << "," << a.profile.second << ")\n";
    }
}

void run_certify(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
    auto g = load_graph(opt.fixture, opt.alist);
    if (opt.a1_spec.empty()) throw std::invalid_argument("certify needs --a1");
    auto a1 = parse_var_spec(opt.a1_spec, g);
    std::vector<tanner::VarSubset> parts;
    for (const auto& s : opt.part_specs) parts.push_back(parse_var_spec(s, g));

    auto certs = structures::certify(g.graph, a1, parts);

    emit_header(out, "certify", g, args);
    out << "a1: " << support_str(a1.members, 'v') << "\n";
    for (std::size_t i = 0; i < parts.size(); ++i)
        out << "part: " << support_str(parts[i].members, 'v') << "\n";
    out << "certificate_count: " << certs.size() << "\n";
    for (const auto& c : certs) {
        out << "certificate: kind=" << structures::to_string(c.kind) << " parts=";
        for (std::size_t i = 0; i < c.parts.size(); ++i)
            out << (i ? "+" : "") << support_str(c.parts[i].members, 'v');
        out << " designated_checks=" << support_str(c.designated_checks, 'c');
        if (!c.connector_checks.empty()) {
            out << " connectors=";
            for (std::size_t i = 0; i < c.connector_checks.size(); ++i)
                out << (i ? "+" : "") << support_str(c.connector_checks[i], 'c');
        }
        out << " detail=\"" << c.detail << "\"\n";
    }
    if (certs.empty()) out << "note: no certificate hypothesis applies\n";
}

void run_hgp(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
    if (opt.h1_src.empty() || opt.h2_src.empty())
        throw std::invalid_argument("hgp needs --h1 and --h2");
    std::string d1, d2;
    auto h1 = load_matrix(opt.h1_src, d1);
    auto h2 = load_matrix(opt.h2_src, d2);
    auto code = css::hypergraph_product(h1, h2);

    out << "report: hgp\n";
    out << "tool: " << kToolVersion << "\n";
    out << "command: " << join_args(args) << "\n";
    out << "input_h1: " << d1 << " (" << h1.rows() << "x" << h1.cols() << ")\n";
    out << "input_h2: " << d2 << " (" << h2.rows() << "x" << h2.cols() << ")\n";
    out << "input_h1_checksum: " << hex64(families::graph_checksum(tanner::from_biadjacency(h1)))
        << "\n";
    out << "input_h2_checksum: " << hex64(families::graph_checksum(tanner::from_biadjacency(h2)))
        << "\n";
    out << "h_x_shape: " << code.h_x.rows() << "x" << code.h_x.cols() << "\n";
    out << "h_z_shape: " << code.h_z.rows() << "x" << code.h_z.cols() << "\n";
    out << "qubits: " << code.n << "\n";
    out << "css_valid: " << (css::css_valid(code) ? "true" : "false") << "\n";
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path + ".hx.alist"), fz(opt.out_path + ".hz.alist");
        if (!f || !fz) throw std::invalid_argument("cannot write to " + opt.out_path);
        f << write_alist(code.h_x);
        fz << write_alist(code.h_z);
        out << "written: " << opt.out_path << ".hx.alist, " << opt.out_path << ".hz.alist\n";
    }
}

void run_generate(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
    tanner::TannerGraph graph;
    std::string descriptor;
    if (!opt.fixture.empty()) {
        const auto& f = families::fixture(opt.fixture);
        graph = f.graph;
        descriptor = "fixture " + f.name;
    } else if (!opt.family.empty()) {
        families::FamilySpec spec;
        if (opt.family == "path") spec.kind = families::FamilyKind::Path;
        else if (opt.family == "cycle") spec.kind = families::FamilyKind::Cycle;
        else if (opt.family == "theta") spec.kind = families::FamilyKind::Theta;
        else if (opt.family == "dumbbell") spec.kind = families::FamilyKind::Dumbbell;
        else throw std::invalid_argument("unknown family: " + opt.family);
        spec.a = opt.a; spec.b = opt.b; spec.c = opt.c;
        spec.a1 = opt.a1; spec.a2 = opt.a2;
        if (opt.variant == "vars") spec.variant = families::ThetaVariant::JunctionsVariables;
        else if (opt.variant == "checks") spec.variant = families::ThetaVariant::JunctionsChecks;
        else throw std::invalid_argument("--variant must be vars or checks");
        graph = families::generate(spec);
        descriptor = "family " + opt.family;
    } else {
        throw std::invalid_argument("generate needs --fixture or --family");
    }

    out << "report: generate\n";
    out << "tool: " << kToolVersion << "\n";
    out << "command: " << join_args(args) << "\n";
    out << "input: " << descriptor << "\n";
    out << "input_checksum: " << hex64(families::graph_checksum(graph)) << "\n";
    out << "variables: " << graph.num_variables() << "\n";
    out << "checks: " << graph.num_checks() << "\n";
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw std::invalid_argument("cannot write to " + opt.out_path);
        f << write_alist(tanner::to_biadjacency(graph));
        out << "written: " << opt.out_path << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"QLDPC decoder-failure analysis"};
    app.require_subcommand(1);
    Options opt;

    auto add_graph_source = [&](CLI::App* sub) {
        sub->add_option("--fixture", opt.fixture, "named study fixture");
        sub->add_option("--alist", opt.alist, "alist parity-check file");
    };

    auto* decode = app.add_subcommand("decode", "run the decoder on one pattern");
    add_graph_source(decode);
    decode->add_option("--error", opt.error_spec, "error support, e.g. v1,v2");
    decode->add_option("--error-bits", opt.error_bits, "error as a bit string");
    decode->add_option("--syndrome", opt.syndrome_bits, "input syndrome bit string");
    decode->add_option("--max-iters", opt.max_iters, "iteration cap");
    decode->add_option("--stabilizers", opt.stabilizers_path, "stabilizer alist (default: graph)");
    decode->add_flag("--trace", opt.trace, "dump full per-iteration message state");

    auto* census = app.add_subcommand("census", "enumerate failure/absorbing sets");
    add_graph_source(census);
    census->add_option("--fis-weight", opt.fis_weight, "max error weight to test");
    census->add_option("--abs-size", opt.abs_size, "max absorbing-set size");
    census->add_option("--stabilizers", opt.stabilizers_path, "stabilizer alist (default: graph)");

    auto* certify = app.add_subcommand("certify", "check failure certificates");
    add_graph_source(certify);
    certify->add_option("--a1", opt.a1_spec, "first absorbing set (v-list or subset name)");
    certify->add_option("--part", opt.part_specs, "additional parts (repeatable)");

    auto* hgp = app.add_subcommand("hgp", "hypergraph product of two matrices");
    hgp->add_option("--h1", opt.h1_src, "first matrix (fixture name or alist path)");
    hgp->add_option("--h2", opt.h2_src, "second matrix");
    hgp->add_option("--out", opt.out_path, "basename for .hx/.hz alist output");

    auto* generate = app.add_subcommand("generate", "emit a family graph or fixture");
    add_graph_source(generate);
    generate->add_option("--family", opt.family, "path | cycle | theta | dumbbell");
    generate->add_option("--a", opt.a, "variable count / first theta length");
    generate->add_option("--b", opt.b, "second theta length / dumbbell path length");
    generate->add_option("--c", opt.c, "third theta length");
    generate->add_option("--variant", opt.variant, "theta junctions: vars | checks");
    generate->add_option("--a1", opt.a1, "first dumbbell cycle length");
    generate->add_option("--a2", opt.a2, "second dumbbell cycle length");

    for (auto* sub : {decode, census, certify})
        sub->add_option("--out", opt.out_path, "write the report to this file");
    generate->add_option("--out", opt.out_path, "write the graph as alist to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    std::ostringstream report;
    try {
        if (decode->parsed()) run_decode(opt, args, report);
        else if (census->parsed()) run_census(opt, args, report);
        else if (certify->parsed()) run_certify(opt, args, report);
        else if (hgp->parsed()) run_hgp(opt, args, report);
        else if (generate->parsed()) run_generate(opt, args, report);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // Internal invariant violations (certificate cross-validation, CSS
        // condition, fixture corruption) are distinct from bad input.
        err << "internal invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    bool to_file = (!opt.out_path.empty() && !hgp->parsed() && !generate->parsed());
    if (to_file) {
        std::ofstream f(opt.out_path);
        if (!f) {
            err << "error: cannot write to " << opt.out_path << "\n";
            return 2;
        }
        f << report.str();
        out << "report written to " << opt.out_path << "\n";
    } else {
        out << report.str();
    }
    return 0;
}

}  // namespace qldpc::cli
