#include "mexsum/series.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace mexsum::series {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) {
        throw std::invalid_argument("coefficient count " + std::to_string(coeffs_.size()) +
                                    " does not match order " + std::to_string(order));
    }
}

TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }

TruncatedSeries one(std::size_t order) { return monomial(order, 0, 1); }

TruncatedSeries monomial(std::size_t order, std::size_t e, const mpz_class& c) {
    if (e > order) {
        throw std::invalid_argument("monomial exponent exceeds order");
    }
    std::vector<mpz_class> coeffs(order + 1);
    coeffs[e] = c;
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<mpz_class> c(a.coeffs());
    for (std::size_t i = 0; i <= a.order(); ++i) c[i] += b.coeff(i);
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<mpz_class> c(a.coeffs());
    for (std::size_t i = 0; i <= a.order(); ++i) c[i] -= b.coeff(i);
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const std::size_t n = a.order();
    std::vector<mpz_class> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            c[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries invert(const TruncatedSeries& a) {
    const mpz_class& a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1) {
        throw std::domain_error("series inversion requires constant term +1 or -1");
    }
    const std::size_t n = a.order();
    std::vector<mpz_class> b(n + 1);
    b[0] = a0;  // 1/a0 == a0 for a0 = +-1
    mpz_class acc;
    for (std::size_t i = 1; i <= n; ++i) {
        acc = 0;
        for (std::size_t k = 1; k <= i; ++k) acc += a.coeff(k) * b[i - k];
        b[i] = -a0 * acc;
    }
    return TruncatedSeries(n, std::move(b));
}

TruncatedSeries pow(const TruncatedSeries& a, unsigned k) {
    TruncatedSeries result = one(a.order());
    for (unsigned i = 0; i < k; ++i) result = mul(result, a);
    return result;
}

TruncatedSeries q_pochhammer(int sign, unsigned a, unsigned b, std::size_t order) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("q_pochhammer sign must be +1 or -1");
    }
    if (a < 1 || b < 1) {
        throw std::invalid_argument("q_pochhammer requires a >= 1 and b >= 1");
    }
    std::vector<mpz_class> c(order + 1);
    c[0] = 1;
    // Multiply in place by (1 + sign*q^e) for each factor exponent e <= order.
    for (std::size_t e = a; e <= order; e += b) {
        for (std::size_t i = order; i >= e; --i) {
            if (sign > 0) c[i] += c[i - e];
            else c[i] -= c[i - e];
            if (i == e) break;
        }
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries euler_product(std::size_t order) { return q_pochhammer(-1, 1, 1, order); }

TruncatedSeries neg_q_product(std::size_t order) { return q_pochhammer(+1, 1, 1, order); }

TruncatedSeries jacobi_cube_series(std::size_t order) {
    std::vector<mpz_class> c(order + 1);
    // t tracks the triangular number m(m+1)/2.
    for (std::size_t m = 0, t = 0; t <= order; ++m, t += m) {
        mpz_class term = 2 * static_cast<unsigned long>(m) + 1;
        c[t] += (m % 2 == 0) ? term : -term;
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries triangular_theta(std::size_t order) {
    std::vector<mpz_class> c(order + 1);
    for (std::size_t m = 0, t = 0; t <= order; ++m, t += m) {
        c[t] += 1;
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries bilateral_theta(std::size_t order) {
    std::vector<mpz_class> c(order + 1);
    c[0] += 1;  // j = 0
    // For j >= 1 the terms at +j and -j have exponents j(2j+1) and j(2j-1),
    // both with sign (-1)^j; the smaller one is j(2j-1).
    for (std::size_t j = 1; j * (2 * j - 1) <= order; ++j) {
        const int s = (j % 2 == 0) ? 1 : -1;
        c[j * (2 * j - 1)] += s;
        if (j * (2 * j + 1) <= order) c[j * (2 * j + 1)] += s;
    }
    return TruncatedSeries(order, std::move(c));
}

std::optional<Mismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a.coeff(i) != b.coeff(i)) {
            return Mismatch{i, a.coeff(i), b.coeff(i)};
        }
    }
    return std::nullopt;
}

bool equal_to_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !first_mismatch(a, b).has_value();
}

std::string to_json(const TruncatedSeries& s) {
    nlohmann::ordered_json j;
    j["order"] = s.order();
    auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
    for (const mpz_class& c : s.coeffs()) arr.push_back(c.get_str());
    return j.dump();
}

std::string to_string(const TruncatedSeries& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i) os << ", ";
        os << s.coeff(i).get_str();
    }
    os << ']';
    return os.str();
}

}  // namespace mexsum::series
