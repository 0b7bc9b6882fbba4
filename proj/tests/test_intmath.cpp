#include <doctest.h>

#include <cmath>

#include "dtuple/intmath.hpp"

using namespace dtuple;

TEST_CASE("isqrt exact values") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(961) == 31);
    CHECK(isqrt(7395) == 85);  // 85^2 = 7225 <= 7395 < 7396 = 86^2
    CHECK_THROWS_AS(isqrt(mpz_class{-1}), Error);
}

TEST_CASE("isqrt bracketing property") {
    for (int64_t v = 0; v <= 1'000'000; v += 17) {
        mpz_class r = isqrt(v);
        CHECK(r * r <= v);
        CHECK((r + 1) * (r + 1) > v);
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    for (int i = 0; i < 200; ++i) {
        mpz_class v = rng.get_z_bits(256);
        mpz_class r = isqrt(v);
        CHECK(r * r <= v);
        CHECK((r + 1) * (r + 1) > v);
    }
}

TEST_CASE("is_perfect_square") {
    CHECK(is_perfect_square(361));   // 3*120 + 1 = 19^2
    CHECK(!is_perfect_square(mpz_class{-4}));
    CHECK(!is_perfect_square(7395));
    CHECK(is_perfect_square(0));
}

TEST_CASE("legendre basic values and errors") {
    CHECK(legendre(0, 7) == 0);
    CHECK(legendre(2, 7) == 1);   // squares mod 7: {1,2,4}
    CHECK(legendre(5, 7) == -1);
    CHECK_THROWS_AS(legendre(3, 2), EvenModulus);
    CHECK_THROWS_AS(legendre(3, 9), NotPrime);
    CHECK_THROWS_AS(legendre(3, 1), NotPrime);
}

TEST_CASE("legendre agrees with residue enumeration for odd p <= 200") {
    const PrimeTable table = primes_up_to(200);
    for (uint64_t p : table.primes) {
        if (p == 2)
            continue;
        std::vector<bool> residue(p, false);
        for (uint64_t x = 1; x < p; ++x)
            residue[(x * x) % p] = true;
        for (int64_t a = -static_cast<int64_t>(p); a < 2 * static_cast<int64_t>(p); ++a) {
            int64_t r = ((a % static_cast<int64_t>(p)) + p) % p;
            int expected = r == 0 ? 0 : (residue[r] ? 1 : -1);
            CHECK(legendre(a, static_cast<unsigned long>(p)) == expected);
        }
    }
}

TEST_CASE("legendre multiplicativity") {
    for (uint64_t p : {3ull, 7ull, 31ull, 97ull}) {
        for (int64_t a = 1; a < 40; ++a) {
            for (int64_t b = 1; b < 40; ++b) {
                if (a % p == 0 || b % p == 0)
                    continue;
                CHECK(legendre(a * b, static_cast<unsigned long>(p)) ==
                      legendre(a, static_cast<unsigned long>(p)) *
                          legendre(b, static_cast<unsigned long>(p)));
            }
        }
    }
}

TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(10).primes == std::vector<uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(100).primes.size() == 25);
    CHECK(primes_up_to(1).primes.empty());
    CHECK_THROWS_AS(primes_up_to(kSieveCeiling + 1), LimitTooLarge);
}

TEST_CASE("chebyshev_theta") {
    const double four_terms =
        std::log(2.0) + std::log(3.0) + std::log(5.0) + std::log(7.0);
    CHECK(chebyshev_theta(10) == doctest::Approx(four_terms).epsilon(1e-12));
    CHECK(chebyshev_theta(10) == doctest::Approx(5.34711).epsilon(1e-5));
    CHECK(chebyshev_theta(1) == 0.0);
    CHECK(chebyshev_theta(862) < 1.01624 * 862);
}

TEST_CASE("theta(Q) < 1.01624 Q across scales") {
    for (uint64_t q : {100ull, 1000ull, 10'000ull, 100'000ull, 1'000'000ull}) {
        double theta = chebyshev_theta(q);
        CHECK(theta < 1.01624 * static_cast<double>(q) - kBoundTolerance);
    }
}

TEST_CASE("log_big") {
    CHECK(log_big(mpz_class{100}) == doctest::Approx(std::log(100.0)));
    mpz_class huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 100);
    CHECK(log_big(huge) == doctest::Approx(100.0 * std::log(10.0)).epsilon(1e-12));
    CHECK(log_big(mpz_class{-100}) == doctest::Approx(std::log(100.0)));
    CHECK_THROWS_AS(log_big(mpz_class{0}), Error);
}
