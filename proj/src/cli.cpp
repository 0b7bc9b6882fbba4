#include "dtuple/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtuple/bounds.hpp"
#include "dtuple/extension.hpp"
#include "dtuple/gapbound.hpp"
#include "dtuple/intmath.hpp"
#include "dtuple/sievebound.hpp"
#include "dtuple/tuples.hpp"

namespace dtuple {

namespace {

using nlohmann::json;

// 12 significant digits, round-half-even (IEEE default).
std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

mpz_class parse_big(const std::string& s) {
    try {
        return mpz_class{s};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("expected a decimal integer, got '" + s + "'");
    }
}

std::vector<mpz_class> parse_elements(const std::string& csv) {
    std::vector<mpz_class> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_big(item));
    if (out.empty())
        throw CLI::ValidationError("--elements: empty list");
    return out;
}

std::vector<DTuple> load_corpus(const std::string& path, std::istream& in) {
    if (path == "-")
        return read_corpus(in);
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot open corpus file: " + path);
    return read_corpus(f);
}

json verify_to_json(const mpz_class& n, const std::vector<mpz_class>& elements) {
    VerifyResult r = verify(n, elements);
    json j;
    j["n"] = n.get_str();
    j["verified"] = r.verified();
    if (r.verified()) {
        auto elems = json::array();
        for (const mpz_class& a : r.tuple->elements)
            elems.push_back(a.get_str());
        j["elements"] = std::move(elems);
        auto wit = json::array();
        for (const auto& [ij, root] : r.tuple->witnesses)
            wit.push_back({{"i", ij.first}, {"j", ij.second}, {"r", root.get_str()}});
        j["witnesses"] = std::move(wit);
    } else {
        std::vector<mpz_class> sorted = elements;
        std::sort(sorted.begin(), sorted.end());
        auto elems = json::array();
        for (const mpz_class& a : sorted)
            elems.push_back(a.get_str());
        j["elements"] = std::move(elems);
        j["failing_pair"] = {sorted[r.failure->i].get_str(),
                             sorted[r.failure->j].get_str()};
        j["value"] = r.failure->value.get_str();
    }
    return j;
}

void cmd_verify(const std::string& n_str, const std::string& elements_csv,
                const std::string& corpus_path, std::istream& in,
                std::ostream& out) {
    if (!corpus_path.empty()) {
        for (const DTuple& t : load_corpus(corpus_path, in))
            out << verify_to_json(t.n, t.elements).dump() << "\n";
        return;
    }
    out << verify_to_json(parse_big(n_str), parse_elements(elements_csv)).dump()
        << "\n";
}

void cmd_search(const std::string& n_str, const std::string& ceiling_str,
                int min_size, const std::string& seed_csv, std::ostream& out) {
    SearchConfig config;
    config.n = parse_big(n_str);
    config.ceiling = parse_big(ceiling_str);
    config.min_size = min_size;
    if (!seed_csv.empty())
        config.start_elements = parse_elements(seed_csv);
    write_corpus(out, enumerate_tuples(config));
}

void cmd_extend(const std::string& n_str, const std::string& elements_csv,
                std::ostream& out) {
    std::vector<mpz_class> elems = parse_elements(elements_csv);
    if (elems.size() != 3)
        throw CLI::ValidationError("extend: --elements needs exactly 3 values");
    std::sort(elems.begin(), elems.end());
    const mpz_class n = parse_big(n_str);
    const TripleWitness w = triple_witness(elems[0], elems[1], elems[2], n);
    const TripleExtension ext = lemma3_extension(w);

    json j;
    j["n"] = n.get_str();
    j["elements"] = {elems[0].get_str(), elems[1].get_str(), elems[2].get_str()};
    j["witness"] = {{"r", w.r.get_str()}, {"s", w.s.get_str()}, {"t", w.t.get_str()}};
    j["lemma3"] = {{"e", ext.e.get_str()},
                   {"x", ext.x.get_str()},
                   {"y", ext.y.get_str()},
                   {"z", ext.z.get_str()},
                   {"identity_holds", ext.identity_holds}};
    try {
        j["regular_extension"] = regular_extend(w).get_str();
    } catch (const Error& e) {
        // an inextensible triple is a result, not a failure
        j["regular_extension"] = nullptr;
        j["regular_extension_error"] = e.what();
    }
    out << j.dump() << "\n";
}

void cmd_gap(const std::string& regime, int k_max, const std::string& format,
             std::ostream& out) {
    const GapRecurrence rec =
        regime == "above400" ? above400_regime() : generic_regime();
    const CharacteristicRoots roots = characteristic_roots(rec);
    const std::vector<mpq_class> alpha = alpha_sequence(rec, k_max);

    if (format == "csv")
        out << "k,alpha,closed_form,error,error_bound,ok\n";
    json rows = json::array();
    for (int k = 2; k <= k_max; ++k) {
        const mpq_class& a = alpha[k - 2];
        const double av = a.get_d();
        const double closed =
            k >= 3 ? roots.beta * std::pow(roots.gamma, k - 3) : 0.0;
        const double error = k >= 3 ? std::fabs(av - closed) : 0.0;
        const double error_bound = k >= 3 ? 1.0 / closed : 0.0;
        const bool ok = k >= 3 ? approximation_error_ok(rec, k) : true;
        if (format == "csv") {
            out << k << "," << fmt12(av) << "," << fmt12(closed) << ","
                << fmt12(error) << "," << fmt12(error_bound) << ","
                << (ok ? "true" : "false") << "\n";
        } else {
            rows.push_back({{"k", k},
                            {"alpha", a.get_str()},
                            {"alpha_value", av},
                            {"closed_form", closed},
                            {"error", error},
                            {"error_bound", error_bound},
                            {"ok", ok}});
        }
    }
    if (format != "csv") {
        json j;
        j["regime"] = regime;
        j["gamma"] = roots.gamma;
        j["beta"] = roots.beta;
        j["rows"] = std::move(rows);
        out << j.dump() << "\n";
    }
}

void cmd_sieve(const std::string& n_str, double c1, double density,
               std::ostream& out) {
    const Prop1Replay rep = prop1_replay(parse_big(n_str), c1, density);
    json j;
    j["n"] = rep.n.get_str();
    j["N"] = rep.N.get_str();
    j["c1"] = rep.c1;
    j["Q"] = rep.Q;
    j["density_assumed"] = rep.density_assumed;
    j["E"] = rep.E;
    j["F"] = rep.F;
    if (rep.ratio)
        j["ratio"] = *rep.ratio;
    else
        j["ratio"] = nullptr;
    j["negative_denominator"] = rep.negative_denominator;
    j["analytic_ratio"] = rep.analytic_ratio;
    j["divisor_fraction"] = rep.divisor_fraction;
    j["density_check_passed"] = rep.density_check_passed;
    if (std::isnan(rep.R)) {
        j["R"] = nullptr;
        j["min_log_n"] = nullptr;
    } else {
        j["R"] = rep.R;
        j["min_log_n"] = rep.min_log_n;
    }
    out << j.dump() << "\n";
}

void cmd_charsum(const std::string& corpus_path, uint64_t prime_ceiling,
                 std::istream& in, std::ostream& out) {
    const std::vector<DTuple> corpus = load_corpus(corpus_path, in);
    const PrimeTable table = primes_up_to(prime_ceiling);
    for (const DTuple& cand : corpus) {
        VerifyResult r = verify(cand.n, cand.elements);
        if (!r.verified())
            throw InputError("charsum: corpus tuple with n = " +
                             cand.n.get_str() + " is not a D(n)-set");
        const DTuple& t = *r.tuple;
        for (uint64_t p : table.primes) {
            if (p == 2 ||
                mpz_divisible_ui_p(t.n.get_mpz_t(), static_cast<unsigned long>(p)))
                continue;
            const std::vector<uint32_t> C = occupied_residues(t, p);
            const CharSumResult cs = double_char_sum(C, C, t.n, p);
            const CharSumLower low = tuple_charsum_lower(t, p);
            json j;
            j["p"] = p;
            j["n"] = t.n.get_str();
            j["A"] = cs.A;
            j["B"] = cs.B;
            j["T"] = cs.T;
            j["bound"] = cs.bound;
            j["floor"] = low.floor_val;
            j["ok"] = low.ok;
            out << j.dump() << "\n";
        }
    }
}

const char* regime_name(MnRegime r) {
    switch (r) {
        case MnRegime::small: return "small";
        case MnRegime::above400: return "above400";
        default: return "huge";
    }
}

void cmd_bounds(const std::string& n_str, const std::string& table_range,
                const std::string& step_str, const std::string& format,
                std::ostream& out) {
    if (!table_range.empty()) {
        const size_t dots = table_range.find("..");
        if (dots == std::string::npos)
            throw CLI::ValidationError("--table: expected lo..hi");
        mpz_class lo = parse_big(table_range.substr(0, dots));
        mpz_class hi = parse_big(table_range.substr(dots + 2));
        mpz_class step = step_str.empty() ? mpz_class{1} : parse_big(step_str);
        if (step < 1)
            throw CLI::ValidationError("--step must be >= 1");
        out << "n,regime,b_part,c_part,combined,published\n";
        for (mpz_class v = lo; v <= hi; v += step) {
            if (v == 0)
                continue;
            const BoundBreakdown b = mn_bound(v);
            out << v.get_str() << "," << regime_name(b.regime) << ","
                << fmt12(b.b_part) << "," << fmt12(b.c_part) << ","
                << fmt12(b.combined) << "," << fmt12(b.published) << "\n";
        }
        return;
    }
    const BoundBreakdown b = mn_bound(parse_big(n_str));
    if (format == "csv") {
        out << "n,regime,b_part,c_part,combined,published\n"
            << b.n.get_str() << "," << regime_name(b.regime) << ","
            << fmt12(b.b_part) << "," << fmt12(b.c_part) << ","
            << fmt12(b.combined) << "," << fmt12(b.published) << "\n";
        return;
    }
    json j;
    j["n"] = b.n.get_str();
    j["regime"] = regime_name(b.regime);
    j["a_part"] = b.a_part;
    j["b_part"] = b.b_part;
    j["c_part"] = b.c_part;
    j["combined"] = b.combined;
    j["published"] = b.published;
    j["margin"] = b.margin;
    j["informative_small_breakdown"] = b.informative_small_breakdown;
    out << j.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"D(n)-tuple toolkit: verification, search, extensions, "
                 "sieve and gap bounds"};
    app.require_subcommand(1);

    std::string n_str, elements_csv, corpus_path, seed_csv, ceiling_str;
    std::string regime = "generic", format = "json", table_range, step_str;
    int min_size = 2, k_max = 20;
    double c1 = 6.0, density = 0.05;
    uint64_t prime_ceiling = 100;

    auto* cmd_v = app.add_subcommand("verify", "check the D(n) property");
    cmd_v->add_option("--n", n_str, "n (decimal string)");
    cmd_v->add_option("--elements", elements_csv, "comma-separated elements");
    cmd_v->add_option("--corpus", corpus_path, "JSON-lines corpus file, - for stdin");

    auto* cmd_s = app.add_subcommand("search", "enumerate maximal D(n)-tuples");
    cmd_s->add_option("--n", n_str)->required();
    cmd_s->add_option("--ceiling", ceiling_str)->required();
    cmd_s->add_option("--min-size", min_size);
    cmd_s->add_option("--seed", seed_csv, "start elements");

    auto* cmd_e = app.add_subcommand("extend", "triple witness, (e,x,y,z) data, regular extension");
    cmd_e->add_option("--n", n_str)->required();
    cmd_e->add_option("--elements", elements_csv)->required();

    auto* cmd_g = app.add_subcommand("gap", "gap recurrence table");
    cmd_g->add_option("--regime", regime)->check(CLI::IsMember({"generic", "above400"}));
    cmd_g->add_option("--k-max", k_max)->check(CLI::Range(3, 10000));
    cmd_g->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_si = app.add_subcommand("sieve", "sieve-proof replay at N = n^2");
    cmd_si->add_option("--n", n_str)->required();
    cmd_si->add_option("--c1", c1);
    cmd_si->add_option("--density", density);

    auto* cmd_c = app.add_subcommand("charsum", "per-tuple character sums");
    cmd_c->add_option("--corpus", corpus_path)->required();
    cmd_c->add_option("--prime-ceiling", prime_ceiling);

    auto* cmd_b = app.add_subcommand("bounds", "M_n bound breakdown");
    cmd_b->add_option("--n", n_str);
    cmd_b->add_option("--table", table_range, "CSV sweep lo..hi");
    cmd_b->add_option("--step", step_str);
    cmd_b->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_v->parsed()) {
            if (corpus_path.empty() && (n_str.empty() || elements_csv.empty())) {
                err << "verify: need --n and --elements, or --corpus\n";
                return 2;
            }
            cmd_verify(n_str, elements_csv, corpus_path, in, out);
        } else if (cmd_s->parsed()) {
            cmd_search(n_str, ceiling_str, min_size, seed_csv, out);
        } else if (cmd_e->parsed()) {
            cmd_extend(n_str, elements_csv, out);
        } else if (cmd_g->parsed()) {
            cmd_gap(regime, k_max, format, out);
        } else if (cmd_si->parsed()) {
            cmd_sieve(n_str, c1, density, out);
        } else if (cmd_c->parsed()) {
            cmd_charsum(corpus_path, prime_ceiling, in, out);
        } else if (cmd_b->parsed()) {
            if (n_str.empty() && table_range.empty()) {
                err << "bounds: need --n or --table\n";
                return 2;
            }
            cmd_bounds(n_str, table_range, step_str, format, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace dtuple
