#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qldpc/gf2.hpp"

// Command-line surface: alist parity-check interchange format, subcommand
// dispatch and deterministic report emission. `run` is the whole program as a
// pure-ish function so tests can drive it without spawning processes.
namespace qldpc::cli {

inline constexpr const char* kToolVersion = "qldpc 1.0.0";

// Raised by parse_alist with the offending line and violated constraint.
struct AlistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// alist layout: "n m", "max_col_deg max_row_deg", n column degrees, m row
// degrees, then n 1-indexed column neighbor lists and m row neighbor lists.
// Zero padding up to the max degree is accepted and ignored.
gf2::BitMatrix parse_alist(const std::string& text);
std::string write_alist(const gf2::BitMatrix& h);

// Executes one subcommand (decode | census | certify | hgp | generate) and
// writes the report to `out`. Returns 0 on success, 2 on input errors,
// 1 on internal invariant violations; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qldpc::cli
