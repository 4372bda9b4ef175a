#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mexsum/series.hpp"

namespace mexsum::identities {

// ---------------------------------------------------------------------------
// Expression AST
//
// Grammar (tokens are case-sensitive; whitespace is free):
//
//   expr     := term  (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := primary ('^' INT)?
//   primary  := INT
//             | 'QP' '(' ('+' | '-') ',' INT ',' INT ')'
//             | 'JACOBI3' | 'THETA_T' | 'THETA_BI'
//             | 'STAT' '(' name ')'
//             | 'HALF' '(' expr ')'
//             | '(' expr ')'
//
// QP(s,a,b) is the truncated product prod_{j>=0} (1 + s q^{a+jb}); JACOBI3,
// THETA_T and THETA_BI are the built-in theta-style series; STAT(name) is the
// generating series of a named partition statistic; HALF(e) divides every
// coefficient by 2 and reports an error on any odd coefficient.
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class SeriesTag { jacobi_cube, triangular_theta, bilateral_theta };
enum class BinKind { add, sub, mul, div };

struct IntConst {
    mpz_class value;
};
struct QProd {
    int sign;  // +1 or -1
    unsigned a;
    unsigned b;
};
struct Named {
    SeriesTag tag;
};
struct Stat {
    std::string name;
};
struct Bin {
    BinKind kind;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct PowExpr {
    ExprPtr base;
    unsigned exponent;  // >= 1
};
struct Half {
    ExprPtr arg;
};

struct Expr {
    std::variant<IntConst, QProd, Named, Stat, Bin, PowExpr, Half> node;
};

ExprPtr expr_int(mpz_class value);
ExprPtr expr_qprod(int sign, unsigned a, unsigned b);
ExprPtr expr_named(SeriesTag tag);
ExprPtr expr_stat(std::string name);
ExprPtr expr_bin(BinKind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr expr_pow(ExprPtr base, unsigned exponent);
ExprPtr expr_half(ExprPtr arg);

bool structurally_equal(const Expr& a, const Expr& b);

/// Canonical text form; parsing it back yields a structurally equal AST.
std::string to_text(const Expr& e);

/// Syntax error with the byte offset into the input and what was expected.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Evaluation-time contract violation: division by a series without unit
/// constant term, or an odd coefficient under HALF.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ExprPtr parse(std::string_view text);

// ---------------------------------------------------------------------------
// Statistic series
// ---------------------------------------------------------------------------

/// Names accepted by STAT(...): sigma_mex, sigma_bar, sigma_o, sigma_e,
/// o, e, o1, o3, o1_minus_o3, d2, d2_even, d2_odd.
const std::vector<std::string>& stat_names();
bool is_stat_name(std::string_view name);

/// Coefficients 0..order of the statistic's generating series, computed by
/// the scalable (formula / convolution) route in one pass.
std::vector<mpz_class> stat_series(const std::string& name, std::size_t order);

/// Caches statistic series per evaluation so both sides of an identity see
/// identical values without recomputation.
class EvalContext {
public:
    const std::vector<mpz_class>& stat(const std::string& name, std::size_t order);

private:
    std::map<std::string, std::vector<mpz_class>> cache_;
};

series::TruncatedSeries evaluate(const Expr& e, std::size_t order);
series::TruncatedSeries evaluate(const Expr& e, std::size_t order, EvalContext& ctx);

// ---------------------------------------------------------------------------
// Identity registry and verification
// ---------------------------------------------------------------------------

struct IdentityEntry {
    std::string id;
    ExprPtr lhs;
    ExprPtr rhs;
    std::string note;
    std::size_t default_order = 60;
};

/// The built-in identities, in fixed order. Constant terms follow the
/// library's n = 0 conventions (the empty partition exists and has mex 1),
/// so every entry holds from order 0 on; each entry's note names the
/// identity it encodes.
const std::vector<IdentityEntry>& registry();
const IdentityEntry* find_entry(std::string_view id);

struct VerificationReport {
    std::string id;
    std::size_t order = 0;
    bool pass = false;
    std::optional<series::Mismatch> mismatch;
    double elapsed_ms = 0.0;
};

VerificationReport verify_entry(const IdentityEntry& entry, std::size_t order);
/// Throws std::invalid_argument for an unknown id.
VerificationReport verify(std::string_view id, std::size_t order);
std::vector<VerificationReport> verify_all(std::size_t order);

/// {"id","order","status","mismatch":{...}|null,"elapsed_ms"}.
std::string report_to_json(const VerificationReport& report);

// ---------------------------------------------------------------------------
// Identity text files: one "ID: LHS == RHS" per line. Blank lines and lines
// starting with '#' are skipped when reading.
// ---------------------------------------------------------------------------

std::string format_entry(const IdentityEntry& entry);
IdentityEntry parse_entry_line(std::string_view line);
std::vector<IdentityEntry> read_identity_file(std::istream& in);
/// The whole registry in the text format, one entry per line.
std::string format_registry();

// ---------------------------------------------------------------------------
// Asymptotics
// ---------------------------------------------------------------------------

struct AsymptoticSample {
    unsigned n = 0;
    /// sigma_mex(n) divided by exp(pi sqrt(2n/3)) / (4 (6n^3)^{1/4}),
    /// evaluated with 256-bit floating precision.
    std::string ratio;
    /// |ratio - 1| as a double, for convergence checks.
    double distance_to_one = 0.0;
};

std::vector<AsymptoticSample> asymptotic_ratios(const std::vector<unsigned>& samples);

}  // namespace mexsum::identities
