#include "dtuple/gapbound.hpp"

#include <mpfr.h>

#include "dtuple/intmath.hpp"

namespace dtuple {

namespace {

constexpr mpfr_prec_t kPrec = 256;  // ~77 decimal digits

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(mpfr_prec_t prec = kPrec) { mpfr_init2(v, prec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    operator mpfr_ptr() { return v; }
    operator mpfr_srcptr() const { return v; }
};

// gamma enclosure [lo, hi] from the exact discriminant coeff^2 + 4.
void gamma_directed(const GapRecurrence& rec, mpfr_ptr lo, mpfr_ptr hi) {
    mpq_class disc = rec.coeff * rec.coeff + 4;
    const mpfr_prec_t prec = mpfr_get_prec(lo);
    Mpfr d_lo(prec), d_hi(prec);
    mpfr_set_q(d_lo, disc.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(d_hi, disc.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(d_lo, d_lo, MPFR_RNDD);
    mpfr_sqrt(d_hi, d_hi, MPFR_RNDU);
    mpfr_add_q(lo, d_lo, rec.coeff.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(hi, d_hi, rec.coeff.get_mpq_t(), MPFR_RNDU);
    mpfr_div_ui(lo, lo, 2, MPFR_RNDD);
    mpfr_div_ui(hi, hi, 2, MPFR_RNDU);
}

// beta = (alpha2 + alpha3 * gamma) / sqrt(coeff^2 + 4); increasing in gamma.
void beta_directed(const GapRecurrence& rec, mpfr_srcptr g_lo,
                   mpfr_srcptr g_hi, mpfr_ptr lo, mpfr_ptr hi) {
    mpq_class disc = rec.coeff * rec.coeff + 4;
    const mpfr_prec_t prec = mpfr_get_prec(lo);
    Mpfr den_lo(prec), den_hi(prec), num(prec);
    mpfr_set_q(den_lo, disc.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(den_lo, den_lo, MPFR_RNDD);
    mpfr_set_q(den_hi, disc.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(den_hi, den_hi, MPFR_RNDU);

    mpfr_mul_q(num, g_lo, rec.alpha3.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(num, num, rec.alpha2.get_mpq_t(), MPFR_RNDD);
    mpfr_div(lo, num, den_hi, MPFR_RNDD);

    mpfr_mul_q(num, g_hi, rec.alpha3.get_mpq_t(), MPFR_RNDU);
    mpfr_add_q(num, num, rec.alpha2.get_mpq_t(), MPFR_RNDU);
    mpfr_div(hi, num, den_lo, MPFR_RNDU);
}

}  // namespace

namespace {

mpq_class make_q(long num, long den) {
    mpq_class q{num, den};
    q.canonicalize();
    return q;
}

}  // namespace

GapRecurrence generic_regime() {
    return GapRecurrence{make_q(4938, 1000), 1, make_q(392, 100)};
}

GapRecurrence above400_regime() {
    return GapRecurrence{make_q(4999999, 1000000), 1, make_q(3999999, 1000000)};
}

std::vector<mpq_class> alpha_sequence(const GapRecurrence& rec, int k_max) {
    if (k_max < 3)
        throw Error("alpha_sequence: k_max must be >= 3");
    std::vector<mpq_class> alpha;
    alpha.reserve(k_max - 1);
    alpha.push_back(rec.alpha2);
    alpha.push_back(rec.alpha3);
    for (int k = 4; k <= k_max; ++k) {
        mpq_class next = rec.coeff * alpha[alpha.size() - 1] +
                         alpha[alpha.size() - 2];
        next.canonicalize();
        alpha.push_back(next);
    }
    return alpha;
}

CharacteristicRoots characteristic_roots(const GapRecurrence& rec) {
    if (rec.coeff < 0)
        throw Error("characteristic_roots: coeff must be nonnegative");
    mpq_class disc = rec.coeff * rec.coeff + 4;
    Mpfr g, sq;
    mpfr_set_q(sq, disc.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(sq, sq, MPFR_RNDN);
    mpfr_add_q(g, sq, rec.coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_div_ui(g, g, 2, MPFR_RNDN);

    // Solve alpha_2 = beta/gamma + B/delta, alpha_3 = beta + B with
    // delta = -1/gamma:  beta = (alpha2 + alpha3*gamma) / (gamma + 1/gamma)
    // and gamma + 1/gamma = sqrt(disc).
    Mpfr beta;
    mpfr_mul_q(beta, g, rec.alpha3.get_mpq_t(), MPFR_RNDN);
    mpfr_add_q(beta, beta, rec.alpha2.get_mpq_t(), MPFR_RNDN);
    mpfr_div(beta, beta, sq, MPFR_RNDN);

    return CharacteristicRoots{mpfr_get_d(g, MPFR_RNDN),
                               mpfr_get_d(beta, MPFR_RNDN)};
}

bool approximation_error_ok(const GapRecurrence& rec, int k) {
    if (k < 3)
        throw Error("approximation_error_ok: k must be >= 3");
    const std::vector<mpq_class> alpha = alpha_sequence(rec, k);
    const mpq_class& alpha_k = alpha.back();

    // alpha_k - beta*gamma^{k-3} shrinks like gamma^{-(k-2)} while the terms
    // themselves grow like gamma^{k-3}, so the enclosure needs relative
    // precision well below gamma^{-(2k-5)}; scale the working precision with k.
    const mpfr_prec_t prec = kPrec + 8 * static_cast<mpfr_prec_t>(k);
    Mpfr g_lo(prec), g_hi(prec), b_lo(prec), b_hi(prec);
    gamma_directed(rec, g_lo, g_hi);
    beta_directed(rec, g_lo, g_hi, b_lo, b_hi);

    // Enclosure of beta * gamma^{k-3}.
    Mpfr p_lo(prec), p_hi(prec);
    mpfr_pow_ui(p_lo, g_lo, static_cast<unsigned long>(k - 3), MPFR_RNDD);
    mpfr_mul(p_lo, p_lo, b_lo, MPFR_RNDD);
    mpfr_pow_ui(p_hi, g_hi, static_cast<unsigned long>(k - 3), MPFR_RNDU);
    mpfr_mul(p_hi, p_hi, b_hi, MPFR_RNDU);

    // Upper bound of |alpha_k - P|: max of ub(alpha_k - P_lo), ub(P_hi - alpha_k).
    Mpfr d1(prec), d2(prec);
    mpfr_sub_q(d1, p_lo, alpha_k.get_mpq_t(), MPFR_RNDD);
    mpfr_neg(d1, d1, MPFR_RNDU);  // exact
    mpfr_sub_q(d2, p_hi, alpha_k.get_mpq_t(), MPFR_RNDU);
    mpfr_srcptr lhs_hi = mpfr_cmp(d1, d2) >= 0 ? static_cast<mpfr_srcptr>(d1)
                                               : static_cast<mpfr_srcptr>(d2);

    // Lower bound of 1/P.
    Mpfr rhs_lo(prec);
    mpfr_ui_div(rhs_lo, 1, p_hi, MPFR_RNDD);

    return mpfr_cmp(lhs_hi, rhs_lo) < 0;
}

SizeBound bn_bound(const mpz_class& n) {
    if (abs(n) <= 1)
        throw TrivialN("bn_bound: |n| must exceed 1");
    SizeBound out;
    out.n = n;
    GapRecurrence rec;
    if (abs(n) > 400) {
        out.regime = GapRegime::above400;
        out.coefficient = 0.6071;
        out.constant = 2.152;
        rec = above400_regime();
    } else {
        out.regime = GapRegime::generic;
        out.coefficient = 0.6114;
        out.constant = 2.158;
        rec = generic_regime();
    }
    out.bound = out.coefficient * log_big(n) + out.constant;

    Mpfr g_lo, g_hi, b_lo, b_hi;
    gamma_directed(rec, g_lo, g_hi);
    beta_directed(rec, g_lo, g_hi, b_lo, b_hi);
    Mpfr log_g, log_b, t;
    mpfr_log(log_g, g_lo, MPFR_RNDN);
    mpfr_log(log_b, b_lo, MPFR_RNDN);
    mpfr_ui_div(t, 1, log_g, MPFR_RNDN);
    out.derived_coefficient = mpfr_get_d(t, MPFR_RNDN);
    mpfr_div(t, log_b, log_g, MPFR_RNDN);
    mpfr_ui_sub(t, 3, t, MPFR_RNDN);
    out.derived_constant = mpfr_get_d(t, MPFR_RNDN);
    return out;
}

}  // namespace dtuple
