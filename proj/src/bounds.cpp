#include "dtuple/bounds.hpp"

#include <mpfr.h>

#include "dtuple/gapbound.hpp"
#include "dtuple/intmath.hpp"
#include "dtuple/sievebound.hpp"

namespace dtuple {

namespace {

constexpr mpfr_prec_t kPrec = 256;

struct Mpfr {
    mpfr_t v;
    Mpfr() { mpfr_init2(v, kPrec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    operator mpfr_ptr() { return v; }
    operator mpfr_srcptr() const { return v; }
};

mpz_class pow10(unsigned exp) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, exp);
    return v;
}

// coeff * log|n| + constant, evaluated at kPrec. Constants are exact
// decimals passed as (numerator, denominator).
void affine_log(mpfr_ptr out, mpfr_srcptr log_n, long coeff_num,
                long coeff_den, long const_num, long const_den) {
    mpq_class coeff{coeff_num, coeff_den}, cst{const_num, const_den};
    mpfr_mul_q(out, log_n, coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_add_q(out, out, cst.get_mpq_t(), MPFR_RNDN);
}

}  // namespace

BoundBreakdown mn_bound(const mpz_class& n) {
    if (n == 0)
        throw ZeroN("mn_bound: n must be nonzero");
    BoundBreakdown out;
    out.n = n;
    out.a_part = 21.0;

    const mpz_class a = abs(n);
    if (a <= 400) {
        out.regime = MnRegime::small;
        out.b_part = 5.0;
        out.c_part = 5.0;
        out.combined = 31.0;
        out.published = 31.0;
        out.margin = 0.0;
        out.informative_small_breakdown = true;
        return out;
    }

    out.regime = a >= pow10(100) ? MnRegime::huge : MnRegime::above400;
    out.b_part = bn_bound(n).bound;
    out.c_part = cn_bound(n);
    out.combined = out.a_part + out.b_part + out.c_part;

    Mpfr log_n, b_hp, c_hp, combined_hp, published_hp;
    mpfr_set_z(log_n, a.get_mpz_t(), MPFR_RNDN);
    mpfr_log(log_n, log_n, MPFR_RNDN);
    affine_log(b_hp, log_n, 6071, 10000, 2152, 1000);
    if (out.regime == MnRegime::huge) {
        affine_log(c_hp, log_n, 837, 100, 0, 1);
        affine_log(published_hp, log_n, 9078, 1000, 0, 1);
    } else {
        affine_log(c_hp, log_n, 11006, 1000, 0, 1);
        affine_log(published_hp, log_n, 15476, 1000, 0, 1);
    }
    mpfr_add(combined_hp, b_hp, c_hp, MPFR_RNDN);
    mpfr_add_ui(combined_hp, combined_hp, 21, MPFR_RNDN);
    out.published = mpfr_get_d(published_hp, MPFR_RNDN);
    mpfr_sub(published_hp, published_hp, combined_hp, MPFR_RNDN);
    out.margin = mpfr_get_d(published_hp, MPFR_RNDN);
    return out;
}

double asymptotic_coefficient() {
    Mpfr v;
    mpfr_sqrt_ui(v, 29, MPFR_RNDN);
    mpfr_add_ui(v, v, 5, MPFR_RNDN);
    mpfr_div_ui(v, v, 2, MPFR_RNDN);
    mpfr_log(v, v, MPFR_RNDN);
    mpfr_ui_div(v, 1, v, MPFR_RNDN);
    mpfr_add_ui(v, v, 2, MPFR_RNDN);
    return mpfr_get_d(v, MPFR_RNDN);
}

}  // namespace dtuple
