#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mexsum::series {

/// Formal power series in q over arbitrary-precision integers, truncated at a
/// fixed order N: exactly the coefficients of q^0 .. q^N are kept. All
/// arithmetic is exact integer arithmetic; there is no floating point in this
/// module. Operations require both operands to have the same order and throw
/// std::invalid_argument otherwise (silent re-truncation is never performed).
///
/// Values are immutable after construction and safe to share across threads.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order)
        : coeffs_(order + 1) {}

    /// Takes ownership of a coefficient vector; coeffs.size() must be order+1.
    TruncatedSeries(std::size_t order, std::vector<mpz_class> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }

    /// Coefficient of q^i; throws std::out_of_range for i > order.
    const mpz_class& coeff(std::size_t i) const { return coeffs_.at(i); }

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

private:
    std::vector<mpz_class> coeffs_;
};

TruncatedSeries zero(std::size_t order);
TruncatedSeries one(std::size_t order);

/// Series with a single term c*q^e (e <= order).
TruncatedSeries monomial(std::size_t order, std::size_t e, const mpz_class& c);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at the common order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse via the recursive coefficient solve.
/// Requires constant term +1 or -1; throws std::domain_error otherwise.
TruncatedSeries invert(const TruncatedSeries& a);

/// a^k by repeated multiplication; k = 0 yields one(order).
TruncatedSeries pow(const TruncatedSeries& a, unsigned k);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

/// Truncation of the infinite product prod_{j>=0} (1 + sign*q^{a+j*b}).
/// sign must be +1 or -1, a >= 1, b >= 1. Factors whose exponent exceeds the
/// order are omitted (they cannot affect retained coefficients), so the work
/// is O(order^2 / b).
TruncatedSeries q_pochhammer(int sign, unsigned a, unsigned b, std::size_t order);

/// (q;q)_inf truncated.
TruncatedSeries euler_product(std::size_t order);

/// (-q;q)_inf truncated.
TruncatedSeries neg_q_product(std::size_t order);

/// sum_{m>=0} (2m+1),(-1)^m q^{m(m+1)/2} — the cube of (q;q)_inf by Jacobi's
/// identity; constructed directly from the term pattern.
TruncatedSeries jacobi_cube_series(std::size_t order);

/// sum_{m>=0} q^{m(m+1)/2}.
TruncatedSeries triangular_theta(std::size_t order);

/// sum_{j=-inf}^{inf} (-1)^j q^{j(2j+1)}. Enumerates j outward from 0 and
/// stops once both +j and -j exponents exceed the order.
TruncatedSeries bilateral_theta(std::size_t order);

struct Mismatch {
    std::size_t exponent;
    mpz_class lhs;
    mpz_class rhs;
};

/// First exponent where the two series differ, or nullopt if they are equal
/// through the common order. Throws std::invalid_argument on order mismatch.
std::optional<Mismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

/// True iff all coefficients through the common order match.
bool equal_to_order(const TruncatedSeries& a, const TruncatedSeries& b);

/// {"order": N, "coeffs": ["1", "-1", ...]} — coefficients as decimal strings
/// so that big integers survive any JSON consumer.
std::string to_json(const TruncatedSeries& s);

/// Coefficient list like "[1, -1, -1, 0, 0]"; intended for diagnostics.
std::string to_string(const TruncatedSeries& s);

}  // namespace mexsum::series
