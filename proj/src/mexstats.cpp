#include "mexsum/mexstats.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mexsum/series.hpp"

namespace mexsum::mexstats {

namespace {

using partitions::p;
using partitions::triangular;

mpz_class ui_pow(unsigned long base, unsigned k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, k);
    return r;
}

void check_moment_power(unsigned k) {
    if (k < 1 || k > kMomentPowerCap) {
        throw std::invalid_argument("moment power k must be in 1.." +
                                    std::to_string(kMomentPowerCap));
    }
}

// Cached coefficients of 1/(q;q)_inf, obtained by series inversion of the
// Euler product. Grown with headroom; warm single-threaded before any
// concurrent reads.
std::vector<mpz_class>& inv_euler_cache() {
    static std::vector<mpz_class> cache;
    return cache;
}

const std::vector<mpz_class>& ensure_inv_euler(std::size_t max_n) {
    auto& cache = inv_euler_cache();
    if (cache.size() <= max_n) {
        const std::size_t bound = std::max(max_n, 2 * cache.size());
        cache = series::invert(series::euler_product(bound)).coeffs();
    }
    return cache;
}

}  // namespace

unsigned mex_of_parts(const std::vector<unsigned>& parts) {
    unsigned want = 1;
    // Parts are weakly decreasing; scan them in ascending order.
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (*it == want) ++want;
        else if (*it > want) break;
    }
    return want;
}

unsigned mex(const partitions::Partition& pi) { return mex_of_parts(pi.parts); }

ZPolynomial::ZPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& ZPolynomial::coeff(std::size_t i) const {
    static const mpz_class zero_value = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero_value;
}

mpz_class ZPolynomial::eval(const mpz_class& z) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

std::string to_string(const ZPolynomial& poly) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
        if (i) os << ", ";
        os << poly.coeffs()[i].get_str();
    }
    os << ']';
    return os.str();
}

std::vector<mpz_class> mex_histogram(unsigned n) {
    std::vector<mpz_class> hist(2);
    partitions::for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        const unsigned m = mex_of_parts(parts);
        if (m >= hist.size()) hist.resize(m + 1);
        hist[m] += 1;
    });
    return hist;
}

mpz_class p_mex_enum(unsigned m, unsigned n) {
    if (m < 1) throw std::invalid_argument("mex values start at 1");
    mpz_class count = 0;
    partitions::for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        if (mex_of_parts(parts) == m) count += 1;
    });
    return count;
}

mpz_class p_mex_series(unsigned m, unsigned n) {
    if (m < 1) throw std::invalid_argument("mex values start at 1");
    const unsigned long long t = triangular(m - 1);
    if (t > n) return 0;
    const auto& inv = ensure_inv_euler(n);
    // Coefficient n of q^t (1 - q^m) / (q;q)_inf.
    mpz_class value = inv[n - t];
    if (t + m <= n) value -= inv[n - t - m];
    return value;
}

ZPolynomial mex_polynomial_enum(unsigned n) { return ZPolynomial(mex_histogram(n)); }

ZPolynomial mex_polynomial_series(unsigned n) {
    std::vector<mpz_class> coeffs(1);
    for (unsigned m = 1; triangular(m - 1) <= n; ++m) {
        coeffs.push_back(p_mex_series(m, n));
    }
    return ZPolynomial(std::move(coeffs));
}

ZPolynomial mex_polynomial(unsigned n) {
    return n <= kEnumRouteCap ? mex_polynomial_enum(n) : mex_polynomial_series(n);
}

ZPolynomial master_rhs_polynomial(unsigned n) {
    // p(n) + (z-1) sum_{t_m <= n} p(n - t_m) z^m, expanded term by term.
    std::vector<mpz_class> coeffs(2);
    coeffs[0] = p(n);
    for (unsigned m = 0; triangular(m) <= n; ++m) {
        const mpz_class pv = p(static_cast<long long>(n) - static_cast<long long>(triangular(m)));
        if (coeffs.size() <= m + 1) coeffs.resize(m + 2);
        coeffs[m + 1] += pv;
        coeffs[m] -= pv;
    }
    return ZPolynomial(std::move(coeffs));
}

mpz_class sigma_mex(unsigned n) {
    mpz_class acc = 0;
    for (unsigned m = 0; triangular(m) <= n; ++m) {
        acc += p(static_cast<long long>(n) - static_cast<long long>(triangular(m)));
    }
    return acc;
}

mpz_class sigma_bar_mex(unsigned n) {
    mpz_class acc = 0;
    for (unsigned m = 0; triangular(m) <= n; ++m) {
        const mpz_class pv = p(static_cast<long long>(n) - static_cast<long long>(triangular(m)));
        const mpz_class w = 2 * static_cast<unsigned long>(m) + 1;
        if (m % 2 == 0) acc += w * pv;
        else acc -= w * pv;
    }
    return acc;
}

mpz_class sigma_moment(unsigned n, unsigned k) {
    check_moment_power(k);
    mpz_class acc = 0;
    for (unsigned m = 0; triangular(m) <= n; ++m) {
        const mpz_class pv = p(static_cast<long long>(n) - static_cast<long long>(triangular(m)));
        acc += (ui_pow(m + 1, k) - ui_pow(m, k)) * pv;
    }
    return acc;
}

mpz_class sigma_bar_moment(unsigned n, unsigned k) {
    check_moment_power(k);
    mpz_class acc = 0;
    for (unsigned m = 0; triangular(m) <= n; ++m) {
        const mpz_class pv = p(static_cast<long long>(n) - static_cast<long long>(triangular(m)));
        const mpz_class w = ui_pow(m + 1, k) + ui_pow(m, k);
        if (m % 2 == 0) acc += w * pv;
        else acc -= w * pv;
    }
    return acc;
}

mpz_class sigma_o_moment(unsigned n, unsigned k) {
    check_moment_power(k);
    mpz_class acc = 0;
    for (unsigned m = 0; triangular(m) <= n; ++m) {
        const mpz_class pv = p(static_cast<long long>(n) - static_cast<long long>(triangular(m)));
        if (m % 2 == 0) acc += ui_pow(m + 1, k) * pv;
        else acc -= ui_pow(m, k) * pv;
    }
    return acc;
}

mpz_class sigma_e_moment(unsigned n, unsigned k) {
    check_moment_power(k);
    mpz_class acc = 0;
    for (unsigned m = 0; triangular(m) <= n; ++m) {
        const mpz_class pv = p(static_cast<long long>(n) - static_cast<long long>(triangular(m)));
        if (m % 2 == 1) acc += ui_pow(m + 1, k) * pv;
        else acc -= ui_pow(m, k) * pv;
    }
    return acc;
}

mpz_class sigma_o_mex(unsigned n) {
    mpz_class acc = 0;
    for (unsigned m = 0; triangular(2 * m) <= n; ++m) {
        const mpz_class block = p(static_cast<long long>(n) - static_cast<long long>(triangular(2 * m))) -
                                p(static_cast<long long>(n) - static_cast<long long>(triangular(2 * m + 1)));
        acc += (2 * static_cast<unsigned long>(m) + 1) * block;
    }
    return acc;
}

mpz_class sigma_e_mex(unsigned n) {
    mpz_class acc = 0;
    for (unsigned m = 0; triangular(2 * m + 1) <= n; ++m) {
        const mpz_class block = p(static_cast<long long>(n) - static_cast<long long>(triangular(2 * m + 1))) -
                                p(static_cast<long long>(n) - static_cast<long long>(triangular(2 * m + 2)));
        acc += (2 * static_cast<unsigned long>(m) + 2) * block;
    }
    return acc;
}

OECounts oe_counts(unsigned n) {
    OECounts counts{0, 0};
    partitions::for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        if (mex_of_parts(parts) % 2 == 1) counts.o += 1;
        else counts.e += 1;
    });
    return counts;
}

mpz_class oe_diff_formula(unsigned n) {
    mpz_class acc = p(n);
    for (unsigned m = 1; triangular(m) <= n; ++m) {
        const mpz_class pv = p(static_cast<long long>(n) - static_cast<long long>(triangular(m)));
        if (m % 2 == 0) acc += 2 * pv;
        else acc -= 2 * pv;
    }
    return acc;
}

OECounts oe_formula(unsigned n) {
    const mpz_class total = p(n);
    const mpz_class diff = oe_diff_formula(n);
    const mpz_class sum = total + diff;
    if (mpz_odd_p(sum.get_mpz_t())) {
        throw std::logic_error("p(n) and o(n)-e(n) must have equal parity");
    }
    OECounts counts;
    counts.o = sum / 2;
    counts.e = total - counts.o;
    return counts;
}

O13Counts o1_o3_counts(unsigned n) {
    O13Counts counts{0, 0};
    partitions::for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        const unsigned m = mex_of_parts(parts);
        if (m % 4 == 1) counts.o1 += 1;
        else if (m % 4 == 3) counts.o3 += 1;
    });
    return counts;
}

mpz_class o1_minus_o3_formula(unsigned n) {
    mpz_class acc = 0;
    for (unsigned m = 0; triangular(2 * m) <= n; ++m) {
        const mpz_class block = p(static_cast<long long>(n) - static_cast<long long>(triangular(2 * m))) -
                                p(static_cast<long long>(n) - static_cast<long long>(triangular(2 * m + 1)));
        if (m % 2 == 0) acc += block;
        else acc -= block;
    }
    return acc;
}

O13Counts o1_o3_formula(unsigned n) {
    const mpz_class odd_total = oe_formula(n).o;
    const mpz_class diff = o1_minus_o3_formula(n);
    const mpz_class sum = odd_total + diff;
    if (mpz_odd_p(sum.get_mpz_t())) {
        throw std::logic_error("o(n) and o1(n)-o3(n) must have equal parity");
    }
    O13Counts counts;
    counts.o1 = sum / 2;
    counts.o3 = odd_total - counts.o1;
    return counts;
}

MexStatRow compute_row(unsigned n, bool enumerate_o13) {
    MexStatRow row;
    row.n = n;
    row.sigma_mex = sigma_mex(n);
    row.sigma_bar = sigma_bar_mex(n);
    row.sigma_o = sigma_o_moment(n, 1);
    row.sigma_e = sigma_e_moment(n, 1);
    const OECounts oe = oe_formula(n);
    row.o = oe.o;
    row.e = oe.e;
    const O13Counts o13 = enumerate_o13 ? o1_o3_counts(n) : o1_o3_formula(n);
    row.o1 = o13.o1;
    row.o3 = o13.o3;
    if (row.sigma_mex != row.sigma_o + row.sigma_e || row.o != row.o1 + row.o3 ||
        row.sigma_mex + row.sigma_bar != 2 * row.sigma_o) {
        throw std::logic_error("mex statistic row failed internal consistency");
    }
    return row;
}

std::string row_csv_header() { return "n,sigma_mex,sigma_bar,sigma_o,sigma_e,o,e,o1,o3"; }

std::string row_to_csv(const MexStatRow& row) {
    std::ostringstream os;
    os << row.n << ',' << row.sigma_mex << ',' << row.sigma_bar << ',' << row.sigma_o << ','
       << row.sigma_e << ',' << row.o << ',' << row.e << ',' << row.o1 << ',' << row.o3;
    return os.str();
}

std::string row_to_json(const MexStatRow& row) {
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["sigma_mex"] = row.sigma_mex.get_str();
    j["sigma_bar"] = row.sigma_bar.get_str();
    j["sigma_o"] = row.sigma_o.get_str();
    j["sigma_e"] = row.sigma_e.get_str();
    j["o"] = row.o.get_str();
    j["e"] = row.e.get_str();
    j["o1"] = row.o1.get_str();
    j["o3"] = row.o3.get_str();
    return j.dump();
}

void warm_series_cache(unsigned max_n) { ensure_inv_euler(max_n); }

void reset_caches() { inv_euler_cache().clear(); }

}  // namespace mexsum::mexstats
