#pragma once

#include <vector>

#include <gmpxx.h>

#include "dtuple/errors.hpp"

namespace dtuple {

// alpha_k = coeff * alpha_{k-1} + alpha_{k-2}, exact rationals throughout.
struct GapRecurrence {
    mpq_class coeff;
    mpq_class alpha2;
    mpq_class alpha3;
};

// coeff 4938/1000, alpha_2 = 1, alpha_3 = 392/100.
GapRecurrence generic_regime();

// coeff 4999999/1000000, alpha_2 = 1, alpha_3 = 3999999/1000000.
GapRecurrence above400_regime();

// alpha_2 .. alpha_{k_max} as exact rationals; k_max >= 3.
std::vector<mpq_class> alpha_sequence(const GapRecurrence& rec, int k_max);

// gamma = (coeff + sqrt(coeff^2 + 4)) / 2 and beta fitted from the initial
// values so the residual alpha_k - beta*gamma^{k-3} rides the decaying
// root. Evaluated in extended precision internally; the returned doubles
// carry ~16 significant digits.
struct CharacteristicRoots {
    double gamma;
    double beta;
};
CharacteristicRoots characteristic_roots(const GapRecurrence& rec);

// |alpha_k - beta*gamma^{k-3}| < 1/(beta*gamma^{k-3}), checked with
// directed rounding: left side rounded up, right side rounded down, so a
// pass is rigorous. k >= 3.
bool approximation_error_ok(const GapRecurrence& rec, int k);

enum class GapRegime { generic, above400 };

// B_n bound: published coefficient/constant pair selected by |n|, plus the
// from-scratch pair derived from the characteristic roots.
struct SizeBound {
    mpz_class n;
    GapRegime regime;
    double bound;                 // coefficient*log|n| + constant
    double coefficient;           // published
    double constant;              // published
    double derived_coefficient;   // 1/log(gamma)
    double derived_constant;      // 3 - log(beta)/log(gamma)
};

// Throws TrivialN for |n| <= 1 (the D(1)/D(-1) literature covers those).
SizeBound bn_bound(const mpz_class& n);

}  // namespace dtuple
