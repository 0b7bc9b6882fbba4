#include "dtuple/intmath.hpp"

#include <cmath>

namespace dtuple {

mpz_class isqrt(const mpz_class& v) {
    if (v < 0)
        throw Error("isqrt: negative argument");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

bool is_perfect_square(const mpz_class& v) {
    if (v < 0)
        return false;
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

bool is_prime(const mpz_class& p) {
    if (p < 2)
        return false;
    if (p < 4)
        return true;
    if (mpz_even_p(p.get_mpz_t()))
        return false;
    mpz_class d = 3;
    while (d * d <= p) {
        if (mpz_divisible_p(p.get_mpz_t(), d.get_mpz_t()))
            return false;
        d += 2;
    }
    return true;
}

int legendre(const mpz_class& a, const mpz_class& p) {
    if (p == 2)
        throw EvenModulus("legendre: p = 2 is not an odd prime");
    if (!is_prime(p))
        throw NotPrime("legendre: modulus is not prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

PrimeTable primes_up_to(uint64_t limit) {
    if (limit > kSieveCeiling)
        throw LimitTooLarge("primes_up_to: limit exceeds sieve ceiling 10^8");
    PrimeTable table;
    table.limit = limit;
    if (limit < 2)
        return table;
    std::vector<bool> composite(limit + 1, false);
    for (uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i])
            continue;
        for (uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    for (uint64_t i = 2; i <= limit; ++i)
        if (!composite[i])
            table.primes.push_back(i);
    return table;
}

double chebyshev_theta(uint64_t limit) {
    const PrimeTable table = primes_up_to(limit);
    // Kahan summation; sums over up to ~5.7M primes must not drift.
    double sum = 0.0, c = 0.0;
    for (uint64_t p : table.primes) {
        double term = std::log(static_cast<double>(p)) - c;
        double t = sum + term;
        c = (t - sum) - term;
        sum = t;
    }
    return sum;
}

double log_big(const mpz_class& v) {
    if (v == 0)
        throw Error("log_big: zero argument");
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace dtuple
