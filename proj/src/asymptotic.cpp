#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "mexsum/identities.hpp"
#include "mexsum/mexstats.hpp"
#include "mexsum/partitions.hpp"

namespace mexsum::identities {

namespace {

// 256 bits of mantissa, about 77 decimal digits. Every other computation in
// the library is exact; floating point is confined to this file.
constexpr mpfr_prec_t kPrecision = 256;

std::string mpfr_to_decimal(mpfr_t x, int digits) {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits, x);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

}  // namespace

std::vector<AsymptoticSample> asymptotic_ratios(const std::vector<unsigned>& samples) {
    std::vector<AsymptoticSample> out;
    out.reserve(samples.size());

    mpfr_t main_term, t, ratio;
    mpfr_inits2(kPrecision, main_term, t, ratio, static_cast<mpfr_ptr>(nullptr));

    for (unsigned n : samples) {
        if (n < 1) throw std::invalid_argument("asymptotic samples require n >= 1");
        const mpz_class sigma = mexstats::sigma_mex(n);

        // main term = exp(pi sqrt(2n/3)) / (4 (6 n^3)^(1/4))
        mpfr_set_ui(t, 2 * static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_div_ui(t, t, 3, MPFR_RNDN);
        mpfr_sqrt(t, t, MPFR_RNDN);
        mpfr_const_pi(main_term, MPFR_RNDN);
        mpfr_mul(main_term, main_term, t, MPFR_RNDN);
        mpfr_exp(main_term, main_term, MPFR_RNDN);

        mpfr_set_ui(t, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_pow_ui(t, t, 3, MPFR_RNDN);
        mpfr_mul_ui(t, t, 6, MPFR_RNDN);
        mpfr_rootn_ui(t, t, 4, MPFR_RNDN);
        mpfr_mul_ui(t, t, 4, MPFR_RNDN);
        mpfr_div(main_term, main_term, t, MPFR_RNDN);

        mpfr_set_z(ratio, sigma.get_mpz_t(), MPFR_RNDN);
        mpfr_div(ratio, ratio, main_term, MPFR_RNDN);

        AsymptoticSample sample;
        sample.n = n;
        sample.ratio = mpfr_to_decimal(ratio, 40);
        mpfr_sub_ui(t, ratio, 1, MPFR_RNDN);
        mpfr_abs(t, t, MPFR_RNDN);
        sample.distance_to_one = mpfr_get_d(t, MPFR_RNDN);
        out.push_back(std::move(sample));
    }

    mpfr_clears(main_term, t, ratio, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace mexsum::identities
