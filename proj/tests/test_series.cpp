#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>
#include <vector>

#include "mexsum/partitions.hpp"
#include "mexsum/series.hpp"

using namespace mexsum;
using series::TruncatedSeries;

namespace {

TruncatedSeries ts(std::vector<long> values) {
    const std::size_t order = values.size() - 1;
    std::vector<mpz_class> coeffs(values.begin(), values.end());
    return TruncatedSeries(order, std::move(coeffs));
}

// Pentagonal-number theorem: (q;q)_inf = sum_{k in Z} (-1)^k q^{k(3k-1)/2}.
// Direct bilateral sum, independent of the product expansion under test.
TruncatedSeries pentagonal_oracle(std::size_t order) {
    std::vector<mpz_class> c(order + 1);
    for (long long k = -static_cast<long long>(order) - 2; k <= static_cast<long long>(order) + 2; ++k) {
        const long long e = k * (3 * k - 1) / 2;
        if (e < 0 || e > static_cast<long long>(order)) continue;
        c[e] += (k % 2 == 0) ? 1 : -1;
    }
    return TruncatedSeries(order, std::move(c));
}

// Count of partitions of n into distinct parts, by enumeration.
mpz_class distinct_count_oracle(unsigned n) {
    mpz_class count = 0;
    partitions::for_each_distinct_partition(n, [&](const std::vector<unsigned>&) { count += 1; });
    return count;
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::vector<mpz_class> c(order + 1);
    for (auto& x : c) x = coeff(rng);
    return TruncatedSeries(order, std::move(c));
}

void check_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
    const auto mismatch = series::first_mismatch(a, b);
    if (mismatch.has_value()) {
        CAPTURE(mismatch->exponent);
        CAPTURE(mismatch->lhs.get_str());
        CAPTURE(mismatch->rhs.get_str());
        FAIL_CHECK("series differ: " << series::to_string(a) << " vs " << series::to_string(b));
    } else {
        CHECK(true);
    }
}

}  // namespace

TEST_CASE("construction enforces the coefficient-count invariant") {
    CHECK_THROWS_AS(TruncatedSeries(3, {mpz_class(1)}), std::invalid_argument);
    CHECK(series::zero(4).coeffs() == std::vector<mpz_class>(5));
    CHECK(series::one(0).coeff(0) == 1);
    CHECK_THROWS_AS(series::monomial(2, 3, 1), std::invalid_argument);
}

TEST_CASE("add: cancellation and identity") {
    check_equal(series::add(ts({1, 1, 0}), ts({1, -1, 0})), ts({2, 0, 0}));
    const TruncatedSeries a = series::neg_q_product(7);
    check_equal(series::add(a, series::zero(7)), a);
    CHECK_THROWS_AS(series::add(series::one(3), series::one(4)), std::invalid_argument);
}

TEST_CASE("add: Euler product plus distinct-parts product at order 4") {
    check_equal(series::euler_product(4), ts({1, -1, -1, 0, 0}));
    check_equal(series::neg_q_product(4), ts({1, 1, 1, 2, 2}));
    check_equal(series::add(series::euler_product(4), series::neg_q_product(4)),
                ts({2, 0, 0, 2, 2}));
}

TEST_CASE("mul: small products") {
    check_equal(series::mul(ts({1, 1, 0}), ts({1, -1, 0})), ts({1, 0, -1}));
    check_equal(series::mul(series::euler_product(4), series::euler_product(4)),
                ts({1, -2, -1, 2, 1}));
    const TruncatedSeries a = series::triangular_theta(9);
    check_equal(series::mul(a, series::one(9)), a);
    CHECK_THROWS_AS(series::mul(series::one(3), series::one(4)), std::invalid_argument);
}

TEST_CASE("invert: partition numbers from the Euler product") {
    check_equal(series::invert(series::euler_product(5)), ts({1, 1, 2, 3, 5, 7}));

    // Same coefficients must count partitions; enumeration is the oracle.
    const TruncatedSeries inv = series::invert(series::euler_product(9));
    for (unsigned n = 0; n <= 9; ++n) {
        mpz_class count = 0;
        partitions::for_each_partition(n, [&](const std::vector<unsigned>&) { count += 1; });
        CHECK(inv.coeff(n) == count);
    }

    check_equal(series::invert(series::one(6)), series::one(6));
    const TruncatedSeries b = series::neg_q_product(8);
    check_equal(series::invert(series::invert(b)), b);
    CHECK_THROWS_AS(series::invert(ts({2, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(series::invert(series::zero(4)), std::domain_error);
}

TEST_CASE("invert of a -1 constant term") {
    const TruncatedSeries a = ts({-1, 3, -2, 5});
    check_equal(series::mul(a, series::invert(a)), series::one(3));
}

TEST_CASE("q_pochhammer: expansions and preconditions") {
    check_equal(series::q_pochhammer(-1, 1, 1, 4), ts({1, -1, -1, 0, 0}));
    check_equal(series::q_pochhammer(+1, 1, 1, 4), ts({1, 1, 1, 2, 2}));
    check_equal(series::q_pochhammer(-1, 2, 2, 1), ts({1, 0}));
    CHECK_THROWS_AS(series::q_pochhammer(-1, 0, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(series::q_pochhammer(-1, 1, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(series::q_pochhammer(2, 1, 1, 4), std::invalid_argument);
}

TEST_CASE("Euler product matches the pentagonal-number oracle") {
    check_equal(series::euler_product(120), pentagonal_oracle(120));
}

TEST_CASE("distinct-parts product matches the enumeration oracle") {
    const TruncatedSeries negq = series::neg_q_product(14);
    for (unsigned n = 0; n <= 14; ++n) {
        CHECK(negq.coeff(n) == distinct_count_oracle(n));
    }
}

TEST_CASE("jacobi_cube_series: term pattern and Jacobi identity") {
    check_equal(series::jacobi_cube_series(6), ts({1, -3, 0, 5, 0, 0, -7}));
    check_equal(series::jacobi_cube_series(0), ts({1}));
    check_equal(series::jacobi_cube_series(50), series::pow(series::euler_product(50), 3));
}

TEST_CASE("triangular_theta: triangular exponents and Ramanujan identity") {
    check_equal(series::triangular_theta(6), ts({1, 1, 0, 1, 0, 0, 1}));
    check_equal(series::triangular_theta(0), ts({1}));
    check_equal(series::triangular_theta(50),
                series::mul(series::q_pochhammer(-1, 2, 2, 50),
                            series::invert(series::q_pochhammer(-1, 1, 2, 50))));
}

TEST_CASE("bilateral_theta: hand-enumerated terms and triple-product form") {
    check_equal(series::bilateral_theta(10), ts({1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1}));
    check_equal(series::bilateral_theta(0), ts({1}));
    const std::size_t n = 60;
    check_equal(series::bilateral_theta(n),
                series::mul(series::mul(series::q_pochhammer(-1, 1, 4, n),
                                        series::q_pochhammer(-1, 3, 4, n)),
                            series::q_pochhammer(-1, 4, 4, n)));
}

TEST_CASE("equal_to_order and first_mismatch") {
    const TruncatedSeries a = series::jacobi_cube_series(12);
    CHECK(series::equal_to_order(a, a));

    const auto mismatch = series::first_mismatch(series::euler_product(10), series::neg_q_product(10));
    REQUIRE(mismatch.has_value());
    CHECK(mismatch->exponent == 1);
    CHECK(mismatch->lhs == -1);
    CHECK(mismatch->rhs == 1);

    CHECK(series::equal_to_order(series::jacobi_cube_series(30),
                                 series::pow(series::euler_product(30), 3)));
    CHECK_THROWS_AS(series::first_mismatch(series::one(3), series::one(4)), std::invalid_argument);
}

TEST_CASE("ring axioms on random series at order 32") {
    std::mt19937 rng(20240517);
    for (int trial = 0; trial < 25; ++trial) {
        const TruncatedSeries a = random_series(rng, 32);
        const TruncatedSeries b = random_series(rng, 32);
        const TruncatedSeries c = random_series(rng, 32);
        check_equal(series::add(a, b), series::add(b, a));
        check_equal(series::mul(a, b), series::mul(b, a));
        check_equal(series::add(series::add(a, b), c), series::add(a, series::add(b, c)));
        check_equal(series::mul(series::mul(a, b), c), series::mul(a, series::mul(b, c)));
        check_equal(series::mul(a, series::add(b, c)),
                    series::add(series::mul(a, b), series::mul(a, c)));
    }
}

TEST_CASE("invert is a two-sided inverse for every unit-constant constructor") {
    for (std::size_t n = 0; n <= 100; ++n) {
        const TruncatedSeries candidates[] = {
            series::euler_product(n),
            series::neg_q_product(n),
            series::jacobi_cube_series(n),
            series::triangular_theta(n),
            series::bilateral_theta(n),
            series::q_pochhammer(-1, 1, 2, n),
        };
        for (const TruncatedSeries& a : candidates) {
            const TruncatedSeries inv = series::invert(a);
            check_equal(series::mul(a, inv), series::one(n));
            check_equal(series::mul(inv, a), series::one(n));
        }
    }
}

TEST_CASE("Euler identity: (-q;q) = 1/(q;q^2) up to order 100") {
    for (std::size_t n = 0; n <= 100; ++n) {
        check_equal(series::neg_q_product(n), series::invert(series::q_pochhammer(-1, 1, 2, n)));
    }
}

TEST_CASE("Jacobi, theta and triple-product identities up to order 100") {
    for (std::size_t n = 0; n <= 100; ++n) {
        check_equal(series::jacobi_cube_series(n), series::pow(series::euler_product(n), 3));
        check_equal(series::triangular_theta(n),
                    series::mul(series::q_pochhammer(-1, 2, 2, n),
                                series::invert(series::q_pochhammer(-1, 1, 2, n))));
        check_equal(series::bilateral_theta(n),
                    series::mul(series::mul(series::q_pochhammer(-1, 1, 4, n),
                                            series::q_pochhammer(-1, 3, 4, n)),
                                series::q_pochhammer(-1, 4, 4, n)));
    }
}

TEST_CASE("JSON serialization keeps coefficients as decimal strings") {
    CHECK(series::to_json(series::euler_product(4)) ==
          R"({"order":4,"coeffs":["1","-1","-1","0","0"]})");
    // A coefficient far beyond 64 bits survives the round trip as text.
    const TruncatedSeries big = series::invert(series::euler_product(450));
    const std::string json = series::to_json(big);
    CHECK(json.find(big.coeff(450).get_str()) != std::string::npos);
    CHECK(big.coeff(416).get_str() == "17873792969689876004");
}
