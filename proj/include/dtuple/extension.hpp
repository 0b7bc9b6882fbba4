#pragma once

#include <gmpxx.h>

#include "dtuple/errors.hpp"

namespace dtuple {

// Square-root witnesses of a D(n)-triple a < b < c:
// r^2 = ab + n, s^2 = ac + n, t^2 = bc + n, all exact, r,s,t >= 0.
struct TripleWitness {
    mpz_class a, b, c, n;
    mpz_class r, s, t;
};

// Builds the witness, checking the three square conditions exactly.
// Throws NotATriple naming the violating pair.
TripleWitness triple_witness(const mpz_class& a, const mpz_class& b,
                             const mpz_class& c, const mpz_class& n);

// The (e, x, y, z) data attached to a triple:
//   a e + n^2 = x^2,  b e + n^2 = y^2,  c e + n^2 = z^2
// and, when identity_holds,
//   c = a + b + e/n + (2/n^2)(a b e + r x y)   exactly in rationals.
// x and y carry the signs that make the identity close; z >= 0.
struct TripleExtension {
    TripleWitness witness;
    mpz_class e, x, y, z;
    bool identity_holds = false;
};

// Construction: e = n(a+b+c) + 2abc - 2rst, then x = |at - rs|,
// y = |bs - rt|, z = |cr - st|, with the signs of x, y adjusted over the
// four combinations until the c-identity closes. Throws NonSquareResidual
// if a square condition fails (a formula-precondition violation).
TripleExtension lemma3_extension(const TripleWitness& w);

// The regular extension d = a + b + c + 2abc + 2rst. The result is
// re-verified as a D(n)-quadruple before return. Throws ExtensionNotLarger
// when d <= c and ExtensionInvalid when re-verification fails.
mpz_class regular_extend(const TripleWitness& w);

// c >= a + b + 2r, exact.
bool gap_check_c(const mpz_class& a, const mpz_class& b, const mpz_class& r,
                 const mpz_class& c);

// d > b + c + 2bc/n^2 + 2t*sqrt(bc)/n^2, decided exactly (rational
// arithmetic plus a squared comparison for the irrational term).
bool gap_check_d(const mpz_class& b, const mpz_class& c, const mpz_class& t,
                 const mpz_class& n, const mpz_class& d);

}  // namespace dtuple
