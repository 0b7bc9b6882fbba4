#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "dtuple/errors.hpp"

namespace dtuple {

// Floor of the square root, exact. v must be nonnegative.
mpz_class isqrt(const mpz_class& v);

// True iff v >= 0 and isqrt(v)^2 == v.
bool is_perfect_square(const mpz_class& v);

// Legendre symbol (a/p) for an odd prime p.
// Throws EvenModulus for p == 2, NotPrime for composite or p < 2.
int legendre(const mpz_class& a, const mpz_class& p);

// Deterministic primality by trial division; intended for desk-scale p.
bool is_prime(const mpz_class& p);

struct PrimeTable {
    uint64_t limit = 0;
    std::vector<uint64_t> primes;
};

inline constexpr uint64_t kSieveCeiling = 100'000'000;

// Sieve of Eratosthenes. Throws LimitTooLarge above kSieveCeiling.
PrimeTable primes_up_to(uint64_t limit);

// theta(limit) = sum of log p over primes p <= limit (natural log,
// compensated summation).
double chebyshev_theta(uint64_t limit);

// Natural log of |v|, v != 0. Safe for values far beyond double range.
double log_big(const mpz_class& v);

// Comparisons against published constants use this absolute tolerance.
inline constexpr double kBoundTolerance = 1e-9;

}  // namespace dtuple
