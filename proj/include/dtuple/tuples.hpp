#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dtuple/errors.hpp"

namespace dtuple {

// A candidate or verified D(n) set. Witnesses are present only after a
// successful verify: r_ij^2 = a_i * a_j + n for every i < j.
struct DTuple {
    mpz_class n;
    std::vector<mpz_class> elements;  // strictly increasing, positive
    std::map<std::pair<size_t, size_t>, mpz_class> witnesses;

    size_t size() const { return elements.size(); }
};

struct VerifyFailure {
    size_t i = 0, j = 0;     // indices into the sorted element list
    mpz_class value;         // a_i * a_j + n, not a perfect square
};

struct VerifyResult {
    std::optional<DTuple> tuple;
    std::optional<VerifyFailure> failure;

    bool verified() const { return tuple.has_value(); }
};

// Checks the D(n) property for every pair. Elements are sorted first.
// Throws ZeroN, DuplicateElements, NonPositiveElement on malformed input;
// a non-square pair is a result, not an error.
VerifyResult verify(const mpz_class& n, std::vector<mpz_class> elements);

struct SearchConfig {
    mpz_class n;
    mpz_class ceiling;
    int min_size = 2;
    std::vector<mpz_class> start_elements;
    uint64_t max_square_tests = 1'000'000'000;
};

// All inclusion-maximal D(n)-tuples with elements <= ceiling and
// size >= min_size, sorted lexicographically by element list.
// Depth-first extension in increasing element order; every emitted tuple
// is re-verified before return. Throws BudgetExceeded past the square-test
// budget.
std::vector<DTuple> enumerate_tuples(const SearchConfig& config);

// 3 when n == 2 (mod 4) (nonnegative-remainder convention), else nothing.
std::optional<int> max_size_by_congruence(const mpz_class& n);

// Corpus files: JSON lines {"n": "<dec>", "elements": ["<dec>", ...]}.
// Integers travel as decimal strings so arbitrary precision survives.
std::vector<DTuple> read_corpus(std::istream& in);
void write_corpus(std::ostream& out, const std::vector<DTuple>& tuples);

}  // namespace dtuple
