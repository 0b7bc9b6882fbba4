#include "dtuple/tuples.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "dtuple/intmath.hpp"

namespace dtuple {

namespace {

constexpr uint64_t square_residue_mask() {
    uint64_t mask = 0;
    for (uint64_t i = 0; i < 64; ++i)
        mask |= uint64_t{1} << ((i * i) & 63);
    return mask;
}

bool square_test(int64_t v) {
    if (v < 0)
        return false;
    const uint64_t u = static_cast<uint64_t>(v);
    constexpr uint64_t mask = square_residue_mask();
    if (!((mask >> (u & 63)) & 1))
        return false;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(u)));
    while (r > 0 && r * r > u)
        --r;
    while ((r + 1) * (r + 1) <= u)
        ++r;
    return r * r == u;
}

bool square_test(const mpz_class& v) {
    return is_perfect_square(v);
}

template <typename Int>
struct Searcher {
    Int n;
    Int ceiling;
    int min_size;
    uint64_t budget;
    uint64_t tests = 0;
    std::vector<std::vector<Int>> out;

    bool square(const Int& v) {
        if (++tests > budget)
            throw BudgetExceeded("enumerate: square-test budget exhausted");
        return square_test(v);
    }

    bool extends(const std::vector<Int>& chain, const Int& c) {
        for (const Int& a : chain)
            if (!square(a * c + n))
                return false;
        return true;
    }

    void dfs(std::vector<Int>& chain) {
        bool extended = false;
        for (Int c = chain.back() + 1; c <= ceiling; ++c) {
            if (extends(chain, c)) {
                chain.push_back(c);
                dfs(chain);
                chain.pop_back();
                extended = true;
            }
        }
        if (extended)
            return;
        if (static_cast<int>(chain.size()) < min_size)
            return;
        // Inclusion-maximality: nothing below or between the elements may
        // extend the set either.
        size_t idx = 0;
        for (Int c = 1; c < chain.back(); ++c) {
            if (idx < chain.size() && chain[idx] == c) {
                ++idx;
                continue;
            }
            if (extends(chain, c))
                return;
        }
        out.push_back(chain);
    }

    void run(const std::vector<Int>& seed) {
        if (!seed.empty()) {
            std::vector<Int> chain = seed;
            if (chain.size() >= 2) {
                for (size_t i = 0; i < chain.size(); ++i)
                    for (size_t j = i + 1; j < chain.size(); ++j)
                        if (!square(chain[i] * chain[j] + n))
                            throw Error("enumerate: seed is not a D(n)-set");
                dfs(chain);
                return;
            }
            const Int a = chain[0];
            for (Int b = a + 1; b <= ceiling; ++b) {
                if (square(a * b + n)) {
                    std::vector<Int> pair{a, b};
                    dfs(pair);
                }
            }
            return;
        }
        for (Int a = 1; a < ceiling; ++a) {
            for (Int b = a + 1; b <= ceiling; ++b) {
                if (square(a * b + n)) {
                    std::vector<Int> pair{a, b};
                    dfs(pair);
                }
            }
        }
    }
};

}  // namespace

VerifyResult verify(const mpz_class& n, std::vector<mpz_class> elements) {
    if (n == 0)
        throw ZeroN("verify: n must be nonzero");
    std::sort(elements.begin(), elements.end());
    for (const mpz_class& a : elements)
        if (a <= 0)
            throw NonPositiveElement("verify: elements must be positive");
    for (size_t i = 1; i < elements.size(); ++i)
        if (elements[i] == elements[i - 1])
            throw DuplicateElements("verify: elements must be distinct");

    DTuple tuple;
    tuple.n = n;
    tuple.elements = elements;
    for (size_t i = 0; i < elements.size(); ++i) {
        for (size_t j = i + 1; j < elements.size(); ++j) {
            mpz_class v = elements[i] * elements[j] + n;
            if (!is_perfect_square(v))
                return VerifyResult{std::nullopt, VerifyFailure{i, j, v}};
            tuple.witnesses[{i, j}] = isqrt(v);
        }
    }
    return VerifyResult{std::move(tuple), std::nullopt};
}

std::vector<DTuple> enumerate_tuples(const SearchConfig& config) {
    if (config.n == 0)
        throw ZeroN("enumerate: n must be nonzero");
    if (config.ceiling < 1)
        throw Error("enumerate: ceiling must be >= 1");
    if (config.min_size < 2)
        throw Error("enumerate: min_size must be >= 2");
    for (const mpz_class& a : config.start_elements)
        if (a <= 0 || a > config.ceiling)
            throw Error("enumerate: seed elements must lie in [1, ceiling]");

    std::vector<std::vector<mpz_class>> raw;
    // Products stay inside int64 when ceiling^2 + |n| < 2^62.
    const mpz_class worst = config.ceiling * config.ceiling + abs(config.n);
    if (config.ceiling.fits_sint_p() && worst < (mpz_class{1} << 62)) {
        Searcher<int64_t> s{config.n.get_si(), config.ceiling.get_si(),
                            config.min_size, config.max_square_tests};
        std::vector<int64_t> seed;
        for (const mpz_class& a : config.start_elements)
            seed.push_back(a.get_si());
        std::sort(seed.begin(), seed.end());
        s.run(seed);
        for (const auto& chain : s.out) {
            std::vector<mpz_class> elems(chain.begin(), chain.end());
            raw.push_back(std::move(elems));
        }
    } else {
        Searcher<mpz_class> s{config.n, config.ceiling, config.min_size,
                              config.max_square_tests};
        std::vector<mpz_class> seed = config.start_elements;
        std::sort(seed.begin(), seed.end());
        s.run(seed);
        raw = std::move(s.out);
    }

    std::sort(raw.begin(), raw.end());
    std::vector<DTuple> out;
    out.reserve(raw.size());
    for (auto& elems : raw) {
        VerifyResult r = verify(config.n, std::move(elems));
        if (!r.verified())
            throw Error("enumerate: internal error, emitted set failed re-verification");
        out.push_back(std::move(*r.tuple));
    }
    return out;
}

std::optional<int> max_size_by_congruence(const mpz_class& n) {
    if (n == 0)
        throw ZeroN("max_size_by_congruence: n must be nonzero");
    mpz_class r = n % 4;
    if (r < 0)
        r += 4;
    if (r == 2)
        return 3;
    return std::nullopt;
}

std::vector<DTuple> read_corpus(std::istream& in) {
    std::vector<DTuple> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("n") ||
            !j.contains("elements") || !j["n"].is_string() ||
            !j["elements"].is_array())
            throw InputError("corpus line " + std::to_string(lineno) +
                             ": expected {\"n\": \"<dec>\", \"elements\": [...]}");
        try {
            DTuple t;
            t.n = mpz_class{j["n"].get<std::string>()};
            for (const auto& e : j["elements"]) {
                if (!e.is_string())
                    throw InputError("corpus line " + std::to_string(lineno) +
                                     ": elements must be decimal strings");
                t.elements.emplace_back(e.get<std::string>());
            }
            std::sort(t.elements.begin(), t.elements.end());
            // candidates stay unverified here; callers verify on demand
            out.push_back(std::move(t));
        } catch (const std::invalid_argument&) {
            throw InputError("corpus line " + std::to_string(lineno) +
                             ": malformed decimal integer");
        }
    }
    return out;
}

void write_corpus(std::ostream& out, const std::vector<DTuple>& tuples) {
    for (const DTuple& t : tuples) {
        nlohmann::json j;
        j["n"] = t.n.get_str();
        auto arr = nlohmann::json::array();
        for (const mpz_class& a : t.elements)
            arr.push_back(a.get_str());
        j["elements"] = std::move(arr);
        out << j.dump() << "\n";
    }
}

}  // namespace dtuple
