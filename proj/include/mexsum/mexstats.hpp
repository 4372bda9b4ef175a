#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "mexsum/partitions.hpp"

namespace mexsum::mexstats {

/// Largest n for which enumeration-backed routes are used by default
/// (p(45) = 89134 partitions keeps sweeps at desk scale).
inline constexpr unsigned kEnumRouteCap = 45;

/// Moment power cap for the public API. Nothing mathematical breaks beyond
/// it; it just keeps (m+1)^k cheap.
inline constexpr unsigned kMomentPowerCap = 10;

/// Smallest positive integer absent from a weakly decreasing parts list.
/// The empty partition has mex 1.
unsigned mex_of_parts(const std::vector<unsigned>& parts);
unsigned mex(const partitions::Partition& pi);

/// Polynomial in z with arbitrary-precision integer coefficients; trailing
/// zero coefficients are trimmed on construction.
class ZPolynomial {
public:
    ZPolynomial() = default;
    explicit ZPolynomial(std::vector<mpz_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of z^i (0 beyond the stored degree).
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class eval(const mpz_class& z) const;

    friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) = default;

private:
    std::vector<mpz_class> coeffs_;
};

std::string to_string(const ZPolynomial& poly);

/// Count of partitions of n by mex value: entry m is the number of
/// partitions with mex exactly m (entry 0 is always 0). One enumeration
/// sweep of P(n).
std::vector<mpz_class> mex_histogram(unsigned n);

/// Number of partitions of n with mex exactly m, by enumeration.
mpz_class p_mex_enum(unsigned m, unsigned n);

/// Same count read off as coefficient n of q^{m(m-1)/2} (1 - q^m) / (q;q)_inf,
/// with 1/(q;q)_inf expanded by series inversion (cached, resettable).
mpz_class p_mex_series(unsigned m, unsigned n);

/// Coefficient of z^m is the number of partitions of n with mex m.
/// Enumeration backs n <= kEnumRouteCap; the series route backs larger n.
ZPolynomial mex_polynomial(unsigned n);
ZPolynomial mex_polynomial_enum(unsigned n);
ZPolynomial mex_polynomial_series(unsigned n);

/// p(n) + (z-1) * sum_m p(n - m(m+1)/2) z^m, expanded exactly.
ZPolynomial master_rhs_polynomial(unsigned n);

/// sum_m p(n - m(m+1)/2): the sum of mex over all partitions of n.
mpz_class sigma_mex(unsigned n);

/// sum_m (-1)^m (2m+1) p(n - m(m+1)/2): mex sum weighted by (-1)^(mex-1).
mpz_class sigma_bar_mex(unsigned n);

/// k-th moment sums, 1 <= k <= kMomentPowerCap (std::invalid_argument
/// otherwise). k = 1 reproduces sigma_mex / sigma_bar_mex.
mpz_class sigma_moment(unsigned n, unsigned k);
mpz_class sigma_bar_moment(unsigned n, unsigned k);

/// Parity-restricted k-th moments (odd mex / even mex).
mpz_class sigma_o_moment(unsigned n, unsigned k);
mpz_class sigma_e_moment(unsigned n, unsigned k);

/// Closed forms via alternating triangular-number blocks:
/// sigma_o_mex(n) = sum (2m+1){p(n-t_{2m}) - p(n-t_{2m+1})} and
/// sigma_e_mex(n) = sum (2m+2){p(n-t_{2m+1}) - p(n-t_{2m+2})}.
/// Equal to the corresponding k=1 moments by construction of the formulas;
/// computed independently here.
mpz_class sigma_o_mex(unsigned n);
mpz_class sigma_e_mex(unsigned n);

struct OECounts {
    mpz_class o;
    mpz_class e;
};

/// Partitions of n with odd / even mex, by enumeration.
OECounts oe_counts(unsigned n);

/// o(n) - e(n) = p(n) + 2 sum_{m>=1} (-1)^m p(n - m(m+1)/2).
mpz_class oe_diff_formula(unsigned n);

/// Formula-route counterpart of oe_counts: o = (p(n) + diff)/2.
OECounts oe_formula(unsigned n);

struct O13Counts {
    mpz_class o1;
    mpz_class o3;
};

/// Partitions of n with mex congruent to 1 / 3 mod 4, by enumeration.
O13Counts o1_o3_counts(unsigned n);

/// o1(n) - o3(n) = sum_m (-1)^m {p(n - t_{2m}) - p(n - t_{2m+1})}.
mpz_class o1_minus_o3_formula(unsigned n);

/// Formula-route counterpart of o1_o3_counts.
O13Counts o1_o3_formula(unsigned n);

/// One table row of every statistic. Internal consistency (sigma_mex ==
/// sigma_o + sigma_e, o == o1 + o3, sigma_mex + sigma_bar == 2 sigma_o) is
/// checked on construction.
struct MexStatRow {
    unsigned n = 0;
    mpz_class sigma_mex;
    mpz_class sigma_bar;
    mpz_class sigma_o;
    mpz_class sigma_e;
    mpz_class o;
    mpz_class e;
    mpz_class o1;
    mpz_class o3;
};

/// Builds a row; o1/o3 come from enumeration when enumerate_o13 is set
/// (meaningful only at enumeration scale), from the formula route otherwise.
MexStatRow compute_row(unsigned n, bool enumerate_o13);

/// CSV columns: n,sigma_mex,sigma_bar,sigma_o,sigma_e,o,e,o1,o3.
std::string row_csv_header();
std::string row_to_csv(const MexStatRow& row);
/// JSON object with the same keys; big integers as decimal strings.
std::string row_to_json(const MexStatRow& row);

/// Pre-extends the cached expansion of 1/(q;q)_inf used by p_mex_series.
/// Same warm-up contract as the partitions caches.
void warm_series_cache(unsigned max_n);
void reset_caches();

}  // namespace mexsum::mexstats
