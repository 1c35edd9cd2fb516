#include "pmns/generate.hpp"
#include "pmns/roots.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pmns;

Int parse_bigint(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("not a decimal integer: " + s);
    }
}

IntPoly parse_poly_coeffs(const std::string& s) {
    // comma-separated ascending coefficients, e.g. "2,0,0,1" for X^3+2
    IntVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(parse_bigint(tok));
    return IntPoly(std::move(v));
}

std::set<std::string> parse_classes(const std::string& s) {
    std::set<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "all") return {};
        out.insert(tok);
    }
    return out;
}

std::set<Strategy> parse_strategies(const std::string& s) {
    std::set<Strategy> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "all") return {};
        if (tok == "lll_a")
            out.insert(Strategy::LllA);
        else if (tok == "shortvec_companion")
            out.insert(Strategy::ShortVecCompanion);
        else if (tok == "block_lattice")
            out.insert(Strategy::BlockLattice);
        else
            throw CLI::ValidationError("unknown strategy: " + tok);
    }
    return out;
}

int cmd_generate(const std::string& prime, unsigned degree,
                 const std::string& classes, long coeff_cap, long inner_cap,
                 int rho_max_bits, const std::string& strategies,
                 unsigned long seed, int jobs, bool text) {
    GenerationRequest req;
    req.p = parse_bigint(prime);
    req.n = degree;
    req.classes = parse_classes(classes);
    req.coeff_cap = coeff_cap;
    req.inner_cap = inner_cap;
    if (rho_max_bits > 0) req.rho_max_bits = static_cast<unsigned>(rho_max_bits);
    req.strategies = parse_strategies(strategies);
    req.seed = seed;
    req.jobs = jobs;
    auto records = generate(req);
    for (const auto& r : records) {
        if (text) {
            IntVec ec;
            for (const auto& c : r.E_coeffs) ec.emplace_back(c, 10);
            std::cout << IntPoly(std::move(ec)).to_string()
                      << "  gamma=" << r.gamma << "  rho_bits=" << r.rho_bits
                      << "  strategy=" << r.strategy
                      << "  class=" << r.class_tag << "\n";
        } else {
            std::cout << record_to_json(r) << "\n";
        }
    }
    std::cerr << records.size() << " PMNS generated\n";
    return 0;
}

int cmd_roots(const std::string& prime, const std::string& poly,
              unsigned long seed) {
    Int p = parse_bigint(prime);
    if (!is_probable_prime(p)) throw NotPrime("roots: p is not prime");
    IntPoly e = parse_poly_coeffs(poly);
    ModCtx ctx(p);
    RootReport rep = find_roots(e, ctx, seed);
    nlohmann::ordered_json j;
    j["count"] = rep.count.get_str();
    std::vector<std::string> roots;
    for (const Int& r : rep.roots) roots.push_back(r.get_str());
    j["roots"] = roots;
    j["method"] = to_string(rep.method);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_check(const std::string& file, unsigned trials, unsigned long seed) {
    std::istream* in = &std::cin;
    std::ifstream f;
    if (!file.empty() && file != "-") {
        f.open(file);
        if (!f) throw Error("check: cannot open " + file);
        in = &f;
    }
    std::string line;
    bool all_ok = true;
    while (std::getline(*in, line)) {
        if (line.empty()) continue;
        PmnsRecord rec = record_from_json(line);
        CheckReport rep = check_record(rec, trials, seed);
        if (rep.ok) {
            IntVec ec;
            for (const auto& c : rec.E_coeffs) ec.emplace_back(c, 10);
            std::cout << "ok    E=" << IntPoly(std::move(ec)).to_string()
                      << " gamma=" << rec.gamma << "\n";
        } else {
            std::cout << "FAIL  " << rep.first_failure << "\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_table(const std::string& example_id) {
    Int p;
    unsigned n;
    Int gamma;
    IntPoly e;
    if (example_id == "ex1a") {
        p = 23;
        n = 3;
        gamma = 7;
        e = IntPoly{2, 0, 0, 1};
    } else if (example_id == "ex1b") {
        p = 31;
        n = 4;
        gamma = 15;
        e = IntPoly{-2, 0, 0, 0, 1};
    } else {
        throw UnknownExample("table: unknown example " + example_id);
    }
    PmnsBasis basis = new_basis(p, n, gamma, e);
    auto table = representation_table(basis, Int(2));
    for (std::size_t a = 0; a < table.size(); ++a) {
        std::cout << a << ":";
        for (const PmnsElem& el : table[a]) {
            std::cout << " (";
            for (std::size_t i = 0; i < el.digits.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << el.digits[i].get_str();
            }
            std::cout << ")";
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PMNS toolkit: generate and verify Polynomial Modular "
                 "Number Systems for a prime p"};
    app.require_subcommand(1);

    std::string prime, classes = "all", strategies = "all", poly, file,
                example_id;
    unsigned degree = 0;
    long coeff_cap = 8, inner_cap = 1;
    int rho_max_bits = 0;
    unsigned long seed = 0;
    unsigned trials = 32;
    int jobs = 1;
    bool text = false;

    auto* gen = app.add_subcommand("generate",
                                   "enumerate PMNS bases for (p, n)");
    gen->add_option("--prime", prime, "modulus p (decimal)")->required();
    gen->add_option("--degree", degree, "digit count n")->required();
    gen->add_option("--classes", classes,
                    "comma list: cyclo,binomial,trinomial,quadrinomial,"
                    "primecst,perron,dumas,bonciocat,sweep or all");
    gen->add_option("--coeff-cap", coeff_cap, "cap on |a_0| (default 8)");
    gen->add_option("--inner-cap", inner_cap,
                    "sweep: cap on |a_i|, i >= 1 (default 1)");
    gen->add_option("--rho-max-bits", rho_max_bits,
                    "keep only systems with rho below 2^bits");
    gen->add_option("--strategies", strategies,
                    "comma list: lll_a,shortvec_companion,block_lattice or all");
    gen->add_option("--seed", seed, "RNG seed (root splitting)");
    gen->add_option("--jobs", jobs, "worker threads (1 = serial)");
    gen->add_flag("--text", text, "human-readable output instead of JSON lines");

    auto* roots = app.add_subcommand("roots", "roots of E modulo p");
    roots->add_option("--prime", prime, "modulus p (decimal)")->required();
    roots->add_option("--poly", poly,
                      "ascending comma-separated coefficients of E")
        ->required();
    roots->add_option("--seed", seed, "RNG seed");

    auto* check = app.add_subcommand("check",
                                     "re-validate JSON-lines records");
    check->add_option("--file", file, "records file (default stdin)");
    check->add_option("--trials", trials, "random add/mul trials per record");
    check->add_option("--seed", seed, "RNG seed");

    auto* table = app.add_subcommand("table", "print a redundancy table");
    table->add_option("example", example_id, "ex1a or ex1b")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(prime, degree, classes, coeff_cap, inner_cap,
                                rho_max_bits, strategies, seed, jobs, text);
        if (roots->parsed()) return cmd_roots(prime, poly, seed);
        if (check->parsed()) return cmd_check(file, trials, seed);
        if (table->parsed()) return cmd_table(example_id);
    } catch (const pmns::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
