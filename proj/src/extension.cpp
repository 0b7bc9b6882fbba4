#include "dtuple/extension.hpp"

#include <utility>
#include <vector>

#include "dtuple/intmath.hpp"
#include "dtuple/tuples.hpp"

namespace dtuple {

TripleWitness triple_witness(const mpz_class& a, const mpz_class& b,
                             const mpz_class& c, const mpz_class& n) {
    if (n == 0)
        throw ZeroN("triple_witness: n must be nonzero");
    if (!(a < b && b < c) || a <= 0)
        throw NotATriple("triple_witness: need positive a < b < c");
    const std::pair<const mpz_class*, const mpz_class*> pairs[] = {
        {&a, &b}, {&a, &c}, {&b, &c}};
    mpz_class roots[3];
    for (int i = 0; i < 3; ++i) {
        mpz_class v = *pairs[i].first * *pairs[i].second + n;
        if (!is_perfect_square(v))
            throw NotATriple("triple_witness: pair (" +
                             pairs[i].first->get_str() + ", " +
                             pairs[i].second->get_str() + ") gives non-square " +
                             v.get_str());
        roots[i] = isqrt(v);
    }
    return TripleWitness{a, b, c, n, roots[0], roots[1], roots[2]};
}

TripleExtension lemma3_extension(const TripleWitness& w) {
    const mpz_class &a = w.a, &b = w.b, &c = w.c, &n = w.n;
    TripleExtension ext;
    ext.witness = w;
    ext.e = n * (a + b + c) + 2 * a * b * c - 2 * w.r * w.s * w.t;

    const mpz_class n2 = n * n;
    const mpz_class va = a * ext.e + n2;
    const mpz_class vb = b * ext.e + n2;
    const mpz_class vc = c * ext.e + n2;
    if (!is_perfect_square(va) || !is_perfect_square(vb) ||
        !is_perfect_square(vc))
        throw NonSquareResidual(
            "lemma3_extension: a square condition failed for e = " +
            ext.e.get_str());
    const mpz_class x0 = isqrt(va), y0 = isqrt(vb);
    ext.z = isqrt(vc);

    // Identity cleared of denominators:
    //   c n^2 = (a + b) n^2 + e n + 2 (a b e + r x y).
    const mpz_class base = (a + b) * n2 + ext.e * n + 2 * a * b * ext.e;
    const mpz_class target = c * n2;
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            mpz_class x = sx * x0, y = sy * y0;
            if (base + 2 * w.r * x * y == target) {
                ext.x = x;
                ext.y = y;
                ext.identity_holds = true;
                return ext;
            }
        }
    }
    ext.x = x0;
    ext.y = y0;
    ext.identity_holds = false;
    return ext;
}

mpz_class regular_extend(const TripleWitness& w) {
    mpz_class d = w.a + w.b + w.c + 2 * w.a * w.b * w.c + 2 * w.r * w.s * w.t;
    if (d <= w.c)
        throw ExtensionNotLarger("regular_extend: d = " + d.get_str() +
                                 " does not exceed c = " + w.c.get_str());
    VerifyResult check = verify(w.n, {w.a, w.b, w.c, d});
    if (!check.verified())
        throw ExtensionInvalid("regular_extend: {a,b,c," + d.get_str() +
                               "} is not a D(n)-quadruple");
    return d;
}

bool gap_check_c(const mpz_class& a, const mpz_class& b, const mpz_class& r,
                 const mpz_class& c) {
    return c >= a + b + 2 * r;
}

bool gap_check_d(const mpz_class& b, const mpz_class& c, const mpz_class& t,
                 const mpz_class& n, const mpz_class& d) {
    // d > b + c + 2bc/n^2 + 2t sqrt(bc)/n^2
    //   <=>  L := n^2 (d - b - c) - 2bc  >  2t sqrt(bc)
    //   <=>  L > 0  and  L^2 > 4 t^2 bc.
    const mpz_class L = n * n * (d - b - c) - 2 * b * c;
    if (L <= 0)
        return false;
    return L * L > 4 * t * t * b * c;
}

}  // namespace dtuple
