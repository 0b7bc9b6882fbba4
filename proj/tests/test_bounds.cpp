#include <doctest.h>

#include <cmath>

#include <mpfr.h>

#include "dtuple/bounds.hpp"
#include "dtuple/gapbound.hpp"
#include "dtuple/intmath.hpp"

using namespace dtuple;

namespace {

mpz_class pow10(unsigned exp) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, exp);
    return v;
}

}  // namespace

TEST_CASE("mn_bound small regime") {
    BoundBreakdown b = mn_bound(100);
    CHECK(b.regime == MnRegime::small);
    CHECK(b.published == 31.0);
    CHECK(b.combined == 31.0);
    CHECK(b.informative_small_breakdown);
    CHECK(b.a_part + b.b_part + b.c_part == b.combined);

    CHECK(mn_bound(400).regime == MnRegime::small);
    CHECK(mn_bound(-400).regime == MnRegime::small);
    CHECK_THROWS_AS(mn_bound(0), ZeroN);
}

TEST_CASE("mn_bound above-400 regime, n = 401 is near-tight") {
    BoundBreakdown b = mn_bound(401);
    CHECK(b.regime == MnRegime::above400);
    const double logn = std::log(401.0);
    CHECK(b.published == doctest::Approx(15.476 * logn).epsilon(1e-12));
    CHECK(b.combined ==
          doctest::Approx(21.0 + 0.6071 * logn + 2.152 + 11.006 * logn)
              .epsilon(1e-12));
    CHECK(b.margin > 0.0);
    CHECK(b.margin == doctest::Approx(0.002).epsilon(1.0));  // order of magnitude
    CHECK(b.margin < 0.01);
}

TEST_CASE("mn_bound huge regime crossover at 10^100") {
    BoundBreakdown b = mn_bound(pow10(100));
    CHECK(b.regime == MnRegime::huge);
    const double logn = 100.0 * std::log(10.0);
    CHECK(b.published == doctest::Approx(9.078 * logn).epsilon(1e-12));
    CHECK(b.margin > 0.0);
    // combined/log|n| reproduces the 9.078 coefficient closely
    CHECK(std::fabs(b.combined / logn - 9.078) < 1e-3);

    CHECK(mn_bound(pow10(100) - 1).regime == MnRegime::above400);
}

TEST_CASE("dominance and monotonicity on a log sweep") {
    double prev_above = 0.0, prev_huge = 0.0;
    for (int i = 0; i <= 100; ++i) {
        // |n| log-spaced from 401 to 10^200
        const double t = static_cast<double>(i) / 100.0;
        const double logn =
            std::log(401.0) + t * (200.0 * std::log(10.0) - std::log(401.0));
        mpz_class n;
        mpfr_t x;
        mpfr_init2(x, 256);
        mpfr_set_d(x, logn, MPFR_RNDN);
        mpfr_exp(x, x, MPFR_RNDN);
        mpfr_get_z(n.get_mpz_t(), x, MPFR_RNDN);
        mpfr_clear(x);
        if (n <= 400)
            n = 401;
        BoundBreakdown b = mn_bound(n);
        CHECK(b.combined <= b.published + kBoundTolerance);
        if (b.regime == MnRegime::above400) {
            CHECK(b.published >= prev_above);
            prev_above = b.published;
        } else {
            CHECK(b.published >= prev_huge);
            prev_huge = b.published;
        }
    }
}

TEST_CASE("asymptotic coefficient") {
    const double coeff = asymptotic_coefficient();
    CHECK(coeff == doctest::Approx(2.607078).epsilon(1e-6));
    CHECK(coeff < 15.476);

    // B-part consistency: with coeff -> 5 the gap recurrence's root is
    // (5 + sqrt(29))/2, so 1/log(gamma) matches the asymptotic B term.
    GapRecurrence limit{5, 1, 4};
    const CharacteristicRoots roots = characteristic_roots(limit);
    CHECK(roots.gamma == doctest::Approx((5.0 + std::sqrt(29.0)) / 2.0)
                             .epsilon(1e-12));
    CHECK(coeff - 2.0 == doctest::Approx(1.0 / std::log(roots.gamma))
                             .epsilon(1e-12));
}

TEST_CASE("regime totality at the boundaries") {
    CHECK(mn_bound(400).regime == MnRegime::small);
    CHECK(mn_bound(401).regime == MnRegime::above400);
    CHECK(mn_bound(pow10(100)).regime == MnRegime::huge);
    CHECK(mn_bound(-pow10(100)).regime == MnRegime::huge);
    CHECK(mn_bound(-401).regime == MnRegime::above400);
}
