// Acceptance suite: end-to-end checks of the library's headline guarantees,
// one printed pass/fail line per criterion. Exits with the number of failed
// criteria. All comparisons are exact integer equality except the asymptotic
// convergence criterion, which is a property check by construction.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mexsum/identities.hpp"
#include "mexsum/mexstats.hpp"
#include "mexsum/partitions.hpp"
#include "mexsum/series.hpp"

using namespace mexsum;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& message) { notes.push_back(message); }

void criterion(int index, const std::string& label, double seconds_limit,
               const std::function<bool()>& body) {
    notes.clear();
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds_limit > 0 && seconds > seconds_limit) {
        ok = false;
        note("exceeded time limit of " + std::to_string(seconds_limit) + " s");
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", index, label.c_str(),
                seconds);
    for (const std::string& message : notes) std::printf("       %s\n", message.c_str());
    std::fflush(stdout);
}

bool check(bool condition, const std::string& message) {
    if (!condition) note("mismatch: " + message);
    return condition;
}

// Enumeration-side statistics of one n, accumulated in a single sweep.
struct EnumStats {
    std::vector<mpz_class> hist;  // partitions by mex value
    mpz_class moment(unsigned k, int parity) const {
        // parity: 0 all, 1 odd mex only, 2 even mex only
        mpz_class acc = 0, mk;
        for (unsigned m = 1; m < hist.size(); ++m) {
            if (parity == 1 && m % 2 == 0) continue;
            if (parity == 2 && m % 2 == 1) continue;
            mpz_ui_pow_ui(mk.get_mpz_t(), m, k);
            acc += mk * hist[m];
        }
        return acc;
    }
    mpz_class bar_moment(unsigned k) const {
        mpz_class acc = 0, mk;
        for (unsigned m = 1; m < hist.size(); ++m) {
            mpz_ui_pow_ui(mk.get_mpz_t(), m, k);
            if (m % 2 == 1) acc += mk * hist[m];
            else acc -= mk * hist[m];
        }
        return acc;
    }
    mpz_class count(unsigned residue, unsigned modulus) const {
        mpz_class acc = 0;
        for (unsigned m = 1; m < hist.size(); ++m) {
            if (m % modulus == residue) acc += hist[m];
        }
        return acc;
    }
};

EnumStats enum_stats(unsigned n) { return EnumStats{mexstats::mex_histogram(n)}; }

bool criterion_golden_values() {
    bool ok = true;
    const EnumStats at4 = enum_stats(4);
    const EnumStats at5 = enum_stats(5);
    ok &= check(mexstats::sigma_o_moment(4, 1) == 5 && at4.moment(1, 1) == 5, "sigma_o(4) == 5");
    ok &= check(mexstats::sigma_e_moment(4, 1) == 4 && at4.moment(1, 2) == 4, "sigma_e(4) == 4");
    const partitions::D2Counts d2 = partitions::d2_counts(4);
    ok &= check(d2.d2e == 5, "D2_even(4) == 5");
    ok &= check(d2.d2o == 4, "D2_odd(4) == 4");
    ok &= check(mexstats::sigma_o_moment(5, 1) == 8 && at5.moment(1, 1) == 8, "sigma_o(5) == 8");
    ok &= check(mexstats::sigma_e_moment(5, 1) == 6 && at5.moment(1, 2) == 6, "sigma_e(5) == 6");
    ok &= check(mexstats::sigma_mex(5) == 14 && at5.moment(1, 0) == 14, "sigma_mex(5) == 14");
    return ok;
}

bool criterion_identity_suite() {
    bool ok = true;
    for (std::size_t order : {std::size_t(60), std::size_t(200)}) {
        const auto start = std::chrono::steady_clock::now();
        const auto reports = identities::verify_all(order);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok &= check(reports.size() == 11, "registry holds 11 entries");
        for (const auto& report : reports) {
            ok &= check(report.pass, report.id + " at order " + std::to_string(order));
        }
        const double limit = order == 60 ? 30.0 : 600.0;
        ok &= check(seconds < limit, "order " + std::to_string(order) + " run within " +
                                         std::to_string(limit) + " s");
    }
    return ok;
}

bool criterion_oracle_equivalence() {
    bool ok = true;
    const unsigned bound = 40;
    for (unsigned n = 0; n <= bound; ++n) {
        const EnumStats stats = enum_stats(n);
        const std::string tag = " at n = " + std::to_string(n);

        ok &= check(mexstats::sigma_mex(n) == stats.moment(1, 0), "sigma_mex" + tag);
        ok &= check(mexstats::sigma_bar_mex(n) == stats.bar_moment(1), "sigma_bar_mex" + tag);
        ok &= check(mexstats::sigma_o_mex(n) == stats.moment(1, 1), "sigma_o_mex" + tag);
        ok &= check(mexstats::sigma_e_mex(n) == stats.moment(1, 2), "sigma_e_mex" + tag);
        for (unsigned k = 1; k <= 3; ++k) {
            const std::string ktag = tag + ", k = " + std::to_string(k);
            ok &= check(mexstats::sigma_moment(n, k) == stats.moment(k, 0), "sigma_moment" + ktag);
            ok &= check(mexstats::sigma_bar_moment(n, k) == stats.bar_moment(k),
                        "sigma_bar_moment" + ktag);
            ok &= check(mexstats::sigma_o_moment(n, k) == stats.moment(k, 1),
                        "sigma_o_moment" + ktag);
            ok &= check(mexstats::sigma_e_moment(n, k) == stats.moment(k, 2),
                        "sigma_e_moment" + ktag);
        }

        for (unsigned m = 1; partitions::triangular(m - 1) <= n + 2; ++m) {
            const mpz_class expected = m < stats.hist.size() ? stats.hist[m] : mpz_class(0);
            ok &= check(mexstats::p_mex_series(m, n) == expected,
                        "p_mex(" + std::to_string(m) + ", " + std::to_string(n) + ")");
        }

        const auto oe = mexstats::oe_formula(n);
        ok &= check(oe.o == stats.count(1, 2), "o" + tag);
        ok &= check(oe.e == stats.count(0, 2), "e" + tag);
        const auto o13 = mexstats::o1_o3_formula(n);
        ok &= check(o13.o1 == stats.count(1, 4), "o1" + tag);
        ok &= check(o13.o3 == stats.count(3, 4), "o3" + tag);

        const auto d2_enum = partitions::d2_counts(n);
        ok &= check(d2_enum.d2 == d2_enum.d2e + d2_enum.d2o, "d2 split sums" + tag);
    }

    // D2 splits: the scalable convolution table against the enumeration.
    const auto d2_scalable = partitions::d2_table(bound);
    for (unsigned n = 0; n <= bound; ++n) {
        const auto d2_enum = partitions::d2_counts(n);
        const std::string tag = " at n = " + std::to_string(n);
        ok &= check(d2_scalable.d2[n] == d2_enum.d2, "d2 routes" + tag);
        ok &= check(d2_scalable.d2e[n] == d2_enum.d2e, "d2_even routes" + tag);
        ok &= check(d2_scalable.d2o[n] == d2_enum.d2o, "d2_odd routes" + tag);
    }
    return ok;
}

bool criterion_master_identity() {
    bool ok = true;
    for (unsigned n = 0; n <= 200; ++n) {
        const auto rhs = mexstats::master_rhs_polynomial(n);
        ok &= check(mexstats::mex_polynomial_series(n) == rhs,
                    "series route at n = " + std::to_string(n));
        if (n <= mexstats::kEnumRouteCap) {
            ok &= check(mexstats::mex_polynomial_enum(n) == rhs,
                        "enumeration route at n = " + std::to_string(n));
        }
    }
    return ok;
}

bool criterion_o1_o3() {
    bool ok = true;
    for (unsigned n = 0; n <= 60; ++n) {
        const auto counts = mexstats::o1_o3_counts(n);
        const mpz_class expected =
            (n % 2 == 1) ? mpz_class(0) : partitions::q_distinct(n / 2);
        ok &= check(counts.o1 - counts.o3 == expected, "o1 - o3 at n = " + std::to_string(n));
    }
    return ok;
}

bool criterion_hss() {
    bool ok = true;
    for (unsigned n = 0; n <= 45; ++n) {
        const auto counts = mexstats::oe_counts(n);
        ok &= check(counts.o - counts.e == mexstats::oe_diff_formula(n),
                    "o - e at n = " + std::to_string(n));
    }
    return ok;
}

bool criterion_asymptotic() {
    const auto samples = identities::asymptotic_ratios({100, 400, 1600, 6400});
    bool ok = check(samples.size() == 4, "four samples");
    for (std::size_t i = 1; i < samples.size(); ++i) {
        ok &= check(samples[i].distance_to_one < samples[i - 1].distance_to_one,
                    "|ratio - 1| shrinks from n = " + std::to_string(samples[i - 1].n) + " to n = " +
                        std::to_string(samples[i].n));
    }
    ok &= check(2.0 * samples.back().distance_to_one <= samples.front().distance_to_one,
                "final distance at most half the first");
    for (const auto& sample : samples) {
        note("n = " + std::to_string(sample.n) + ": ratio = " + sample.ratio);
    }
    return ok;
}

bool criterion_negative_control() {
    const auto broken = identities::parse_entry_line(
        "BROKEN_FIXTURE: JACOBI3 + 1 - QP(-,7,999) == QP(-,1,1)^3");
    const auto report = identities::verify_entry(broken, 40);
    bool ok = check(!report.pass, "corrupted identity must fail");
    ok &= check(report.mismatch.has_value(), "mismatch is reported");
    if (report.mismatch.has_value()) {
        ok &= check(report.mismatch->exponent == 7, "first mismatch at exponent 7");
        ok &= check(report.mismatch->lhs == 1 && report.mismatch->rhs == 0,
                    "mismatching coefficients 1 vs 0");
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "golden values for n = 4 and n = 5", 1.0, criterion_golden_values);
    criterion(2, "all 11 identities at order 60 and order 200", 0.0, criterion_identity_suite);
    criterion(3, "formula/series routes equal enumeration for n <= 40", 300.0,
              criterion_oracle_equivalence);
    criterion(4, "mex polynomial equals its closed form for n <= 200", 0.0,
              criterion_master_identity);
    criterion(5, "o1 - o3 is 0 (odd n) or q(n/2) (even n) for n <= 60", 0.0, criterion_o1_o3);
    criterion(6, "o - e matches the alternating partition sum for n <= 45", 0.0, criterion_hss);
    criterion(7, "sigma_mex asymptotic ratio converges monotonically to 1", 120.0,
              criterion_asymptotic);
    criterion(8, "corrupted identity fails with located first mismatch", 0.0,
              criterion_negative_control);
    return failures;
}
