#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dtuple/errors.hpp"
#include "dtuple/tuples.hpp"

namespace dtuple {

// Vinogradov double sum T = sum_{x in A} sum_{y in B} ((xy + n)/p),
// with |T| < sqrt(p |A| |B|) for nonempty A, B.
struct CharSumResult {
    uint64_t p = 0;
    mpz_class n;
    std::vector<uint32_t> A, B;
    int64_t T = 0;
    double bound = 0.0;
};

// Direct double summation of Legendre symbols. A, B must be subsets of
// {0..p-1}. Throws SharedFactor when p | n, plus the legendre() errors.
CharSumResult double_char_sum(const std::vector<uint32_t>& A,
                              const std::vector<uint32_t>& B,
                              const mpz_class& n, uint64_t p);

// C = {a mod p : a in D.elements}, sorted, duplicates collapsed.
std::vector<uint32_t> occupied_residues(const DTuple& tuple, uint64_t p);

// T over C x C against the floor |C|(|C|-3).
struct CharSumLower {
    int64_t T = 0;
    int64_t floor_val = 0;
    bool ok = false;
};
CharSumLower tuple_charsum_lower(const DTuple& tuple, uint64_t p);

// g(p) = min(floor(sqrt(p)) + 3, p).
uint64_t gp_paper(uint64_t p);

// Gallagher's larger sieve over the classes (p, g_p) in an interval of
// length N. bound is absent when the denominator is nonpositive.
struct SieveReport {
    std::vector<std::pair<uint64_t, uint64_t>> prime_classes;
    mpz_class interval_length;
    double numerator = 0.0;    // E = sum log p - log N
    double denominator = 0.0;  // F = sum log p / g_p - log N
    std::optional<double> bound;
};
SieveReport gallagher_report(
    const std::vector<std::pair<uint64_t, uint64_t>>& prime_classes,
    const mpz_class& N);
std::optional<double> gallagher_bound(
    const std::vector<std::pair<uint64_t, uint64_t>>& prime_classes,
    const mpz_class& N);

// Numeric replay of the whole sieve-bound proof at N = n^2.
struct Prop1Replay {
    mpz_class n;
    mpz_class N;
    double c1 = 0.0;
    uint64_t Q = 0;                 // floor(c1 * log^2 N)
    double density_assumed = 0.0;   // 0.05 or 0.01
    double E = 0.0;
    double F = 0.0;
    std::optional<double> ratio;    // E/F, absent when F <= 0
    bool negative_denominator = false;
    double analytic_ratio = 0.0;    // 1.01624 c1 / (K sqrt(c1) - 1) * log N
    double divisor_fraction = 0.0;  // fraction of primes <= Q dividing n
    bool density_check_passed = false;
    double R = 0.0;                 // density threshold, NaN when Q <= 860
    double min_log_n = 0.0;         // companion lower bound for log|n|
};

// Throws DomainTooSmall for |n| <= 400.
Prop1Replay prop1_replay(const mpz_class& n, double c1 = 6.0,
                         double density = 0.05);

// R = (Q / (20 log Q)) * log(Q / (20 log Q)) and the induced lower bound
// R (1 - 1.136/log R) on log|n| for any n violating the density
// assumption. Throws QTooSmall for Q <= 860.
struct DensityThreshold {
    double R = 0.0;
    double min_log_n = 0.0;
};
DensityThreshold density_threshold(double Q);

// C_n bound: 5 for |n| <= 400, 8.37 log|n| for |n| >= 10^100,
// 11.006 log|n| in between.
double cn_bound(const mpz_class& n);

}  // namespace dtuple
