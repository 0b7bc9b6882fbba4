#include "dtuple/sievebound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dtuple/intmath.hpp"

namespace dtuple {

namespace {

// chi[v] = Legendre symbol (v/p), built from the residue squares.
std::vector<int8_t> legendre_table(uint64_t p) {
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t x = 1; x < p; ++x)
        chi[(x * x) % p] = 1;
    return chi;
}

void require_odd_prime(uint64_t p) {
    if (p == 2)
        throw EvenModulus("double_char_sum: p = 2 is not an odd prime");
    if (!is_prime(mpz_class{static_cast<unsigned long>(p)}))
        throw NotPrime("double_char_sum: modulus is not prime");
}

double kahan_total(const std::vector<double>& terms) {
    double sum = 0.0, c = 0.0;
    for (double term : terms) {
        double y = term - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

mpz_class pow10(unsigned exp) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, exp);
    return v;
}

}  // namespace

CharSumResult double_char_sum(const std::vector<uint32_t>& A,
                              const std::vector<uint32_t>& B,
                              const mpz_class& n, uint64_t p) {
    require_odd_prime(p);
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)))
        throw SharedFactor("double_char_sum: p divides n");
    for (uint32_t v : A)
        if (v >= p)
            throw Error("double_char_sum: A is not a subset of {0..p-1}");
    for (uint32_t v : B)
        if (v >= p)
            throw Error("double_char_sum: B is not a subset of {0..p-1}");

    CharSumResult res;
    res.p = p;
    res.n = n;
    res.A = A;
    res.B = B;
    if (A.empty() || B.empty())
        return res;

    const std::vector<int8_t> chi = legendre_table(p);
    mpz_class nm = n % static_cast<unsigned long>(p);
    if (nm < 0)
        nm += static_cast<unsigned long>(p);
    const uint64_t nr = nm.get_ui();

    int64_t total = 0;
    for (uint32_t x : A)
        for (uint32_t y : B)
            total += chi[(static_cast<uint64_t>(x) * y + nr) % p];
    res.T = total;
    res.bound = std::sqrt(static_cast<double>(p) * static_cast<double>(A.size()) *
                          static_cast<double>(B.size()));
    return res;
}

std::vector<uint32_t> occupied_residues(const DTuple& tuple, uint64_t p) {
    if (p < 2)
        throw Error("occupied_residues: p must be prime");
    std::vector<uint32_t> out;
    for (const mpz_class& a : tuple.elements) {
        mpz_class r = a % static_cast<unsigned long>(p);
        if (r < 0)
            r += static_cast<unsigned long>(p);
        out.push_back(static_cast<uint32_t>(r.get_ui()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CharSumLower tuple_charsum_lower(const DTuple& tuple, uint64_t p) {
    if (tuple.size() < 2)
        throw Error("tuple_charsum_lower: need at least 2 elements");
    const std::vector<uint32_t> C = occupied_residues(tuple, p);
    const CharSumResult cs = double_char_sum(C, C, tuple.n, p);
    CharSumLower out;
    out.T = cs.T;
    const int64_t size = static_cast<int64_t>(C.size());
    out.floor_val = size * (size - 3);
    out.ok = out.T >= out.floor_val;
    return out;
}

uint64_t gp_paper(uint64_t p) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(p)));
    while (r > 0 && r * r > p)
        --r;
    while ((r + 1) * (r + 1) <= p)
        ++r;
    return std::min(r + 3, p);
}

SieveReport gallagher_report(
    const std::vector<std::pair<uint64_t, uint64_t>>& prime_classes,
    const mpz_class& N) {
    if (N < 1)
        throw Error("gallagher_report: N must be positive");
    SieveReport rep;
    rep.prime_classes = prime_classes;
    rep.interval_length = N;
    std::vector<double> num_terms, den_terms;
    for (auto [p, g] : prime_classes) {
        if (g < 1)
            throw Error("gallagher_report: g(p) must be >= 1");
        if (!is_prime(mpz_class{static_cast<unsigned long>(p)}))
            throw NotPrime("gallagher_report: non-prime modulus");
        const double logp = std::log(static_cast<double>(p));
        num_terms.push_back(logp);
        den_terms.push_back(logp / static_cast<double>(g));
    }
    const double logN = log_big(N);
    rep.numerator = kahan_total(num_terms) - logN;
    rep.denominator = kahan_total(den_terms) - logN;
    if (rep.denominator > 0)
        rep.bound = rep.numerator / rep.denominator;
    return rep;
}

std::optional<double> gallagher_bound(
    const std::vector<std::pair<uint64_t, uint64_t>>& prime_classes,
    const mpz_class& N) {
    return gallagher_report(prime_classes, N).bound;
}

DensityThreshold density_threshold(double Q) {
    if (!(Q > 860))
        throw QTooSmall("density_threshold: Q must exceed 860");
    const double w = Q / (20.0 * std::log(Q));
    DensityThreshold out;
    out.R = w * std::log(w);
    out.min_log_n = out.R * (1.0 - 1.136 / std::log(out.R));
    return out;
}

Prop1Replay prop1_replay(const mpz_class& n, double c1, double density) {
    if (abs(n) <= 400)
        throw DomainTooSmall("prop1_replay: |n| must exceed 400");
    Prop1Replay rep;
    rep.n = n;
    rep.N = n * n;
    rep.c1 = c1;
    rep.density_assumed = density;

    const double logN = log_big(rep.N);
    rep.Q = static_cast<uint64_t>(std::floor(c1 * logN * logN));

    const PrimeTable table = primes_up_to(rep.Q);
    std::vector<double> num_terms, den_terms;
    uint64_t dividing = 0;
    for (uint64_t p : table.primes) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            ++dividing;
            continue;
        }
        const double logp = std::log(static_cast<double>(p));
        num_terms.push_back(logp);
        den_terms.push_back(logp / static_cast<double>(gp_paper(p)));
    }
    rep.E = kahan_total(num_terms) - logN;
    rep.F = kahan_total(den_terms) - logN;
    if (rep.F > 0)
        rep.ratio = rep.E / rep.F;
    else
        rep.negative_denominator = true;

    const double K = density <= 0.011 ? 0.986 : 0.861;
    rep.analytic_ratio = 1.01624 * c1 / (K * std::sqrt(c1) - 1.0) * logN;

    rep.divisor_fraction =
        table.primes.empty()
            ? 0.0
            : static_cast<double>(dividing) / static_cast<double>(table.primes.size());
    rep.density_check_passed = rep.divisor_fraction <= density;

    if (rep.Q > 860) {
        const DensityThreshold th = density_threshold(static_cast<double>(rep.Q));
        rep.R = th.R;
        rep.min_log_n = th.min_log_n;
    } else {
        rep.R = std::numeric_limits<double>::quiet_NaN();
        rep.min_log_n = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

double cn_bound(const mpz_class& n) {
    if (n == 0)
        throw ZeroN("cn_bound: n must be nonzero");
    const mpz_class a = abs(n);
    if (a <= 400)
        return 5.0;
    if (a >= pow10(100))
        return 8.37 * log_big(n);
    return 11.006 * log_big(n);
}

}  // namespace dtuple
