#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tzeta/core/complex.hpp"
#include "tzeta/core/precision.hpp"

namespace tzeta::cli {

inline constexpr int kSchemaVersion = 1;

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // an identity failed
inline constexpr int kExitDomain = 2;   // domain or pole error
inline constexpr int kExitUsage = 64;

/// "a+bi", "a-bi", "a", "bi", "i", "-i"; no spaces. Throws ParseError.
Complex parse_complex(std::string_view text);

/// Compiles a potential V(x) from constants, x, + - * /, ^, parentheses and
/// sin, cos, exp, sqrt, log. Throws ParseError.
std::function<double(double)> parse_expression(std::string_view text);

// ---- identity suite -----------------------------------------------------

struct IdentityEntry {
    std::string id;
    std::string anchor;  // short statement of the identity
    Complex lhs;
    Complex rhs;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string error;  // set when the evaluation itself threw
    double runtime_ms = 0.0;
};

struct SuiteOptions {
    Precision precision;
    std::string filter;      // substring of the id; empty selects all
    double tol_scale = 1.0;  // multiplies every tolerance
};

/// Ids of every registered identity, sorted.
std::vector<std::string> identity_ids();

/// Runs the selected identities in parallel; entries are sorted by id.
std::vector<IdentityEntry> run_identities(const SuiteOptions& opt);

/// Full command-line entry point. Output goes to `out` (or --out FILE),
/// diagnostics for usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tzeta::cli
