#include "pmns/generate.hpp"

#include "pmns/roots.hpp"

#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <map>
#include <tuple>

namespace pmns {

const std::set<std::string> kAllClasses = {
    "cyclo",     "binomial", "trinomial", "quadrinomial", "primecst",
    "perron",    "dumas",    "bonciocat", "sweep"};

namespace {

std::set<std::string> effective_classes(const GenerationRequest& req) {
    if (req.classes.empty()) {
        std::set<std::string> all = kAllClasses;
        all.erase("sweep");  // exhaustive sweep only on request
        return all;
    }
    for (const auto& c : req.classes)
        if (!kAllClasses.count(c)) throw Error("unknown class tag: " + c);
    return req.classes;
}

void push_unique(std::vector<std::pair<IntPoly, PolyClassTag>>& out,
                 std::map<IntVec, std::size_t>& seen, IntPoly e,
                 PolyClassTag tag) {
    auto [it, inserted] = seen.emplace(e.c, out.size());
    if (inserted) out.emplace_back(std::move(e), tag);
}

IntPoly sparse_poly(unsigned n, std::initializer_list<std::pair<unsigned, long>>
                                    terms) {
    IntVec v(n + 1, Int(0));
    v[n] = 1;
    for (auto [i, c] : terms) v[i] = c;
    return IntPoly(std::move(v));
}

unsigned long mix_seed(unsigned long seed, unsigned long index) {
    unsigned long z = seed ^ (index * 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<std::pair<IntPoly, PolyClassTag>> enumerate_candidates(
    const GenerationRequest& req) {
    const unsigned n = req.n;
    if (n < 2) throw Error("enumerate_candidates: n must be >= 2");
    const long cap = req.coeff_cap.get_si();
    std::vector<std::pair<IntPoly, PolyClassTag>> out;
    std::map<IntVec, std::size_t> seen;
    auto classes = effective_classes(req);

    if (classes.count("cyclo"))
        for (IntPoly& e : cyclo_suitable(n))
            push_unique(out, seen, std::move(e), PolyClassTag::Cyclo);

    if (classes.count("binomial"))
        for (long c = -cap; c <= cap; ++c) {
            if (std::abs(c) < 2) continue;
            if (binomial_irreducible(n, Int(c)))
                push_unique(out, seen, sparse_poly(n, {{0, c}}),
                            PolyClassTag::Binomial);
        }

    if (classes.count("trinomial"))
        for (unsigned m = 1; 2 * m < n; ++m)
            for (int beta : {1, -1})
                for (int delta : {1, -1})
                    if (trinomial_irreducible(n, m, beta, delta))
                        push_unique(out, seen,
                                    sparse_poly(n, {{m, beta}, {0, delta}}),
                                    PolyClassTag::Trinomial);

    if (classes.count("quadrinomial"))
        for (unsigned b = 2; 2 * b <= n; ++b)
            for (unsigned c = 1; c < b; ++c)
                for (int s1 : {1, -1})
                    for (int s2 : {1, -1})
                        for (int s3 : {1, -1})
                            if (quadrinomial_irreducible(n, b, c, s1, s2, s3))
                                push_unique(
                                    out, seen,
                                    sparse_poly(n, {{b, s1}, {c, s2}, {0, s3}}),
                                    PolyClassTag::Quadrinomial);

    if (classes.count("primecst"))
        for (long mu = 2; mu <= cap; ++mu) {
            if (!is_probable_prime(Int(mu))) continue;
            for (IntPoly& e : primecst_enumerate(n, Int(mu)))
                push_unique(out, seen, std::move(e), PolyClassTag::PrimeCst);
        }

    if (classes.count("perron"))
        for (long a1 = 3; a1 <= cap; ++a1)
            for (long signed_a1 : {a1, -a1})
                for (IntPoly& e : perron_enumerate(n, Int(signed_a1)))
                    push_unique(out, seen, std::move(e), PolyClassTag::Perron);

    if (classes.count("dumas") || classes.count("bonciocat"))
        for (unsigned k = 1; 2 * k <= n; ++k)
            for (long a = -cap; a <= cap; ++a)
                for (long b = -cap; b <= cap; ++b) {
                    if (b == 0) continue;
                    IntPoly e = sparse_poly(n, {{k, a}, {0, b}});
                    if (classes.count("dumas") && dumas_irreducible(e))
                        push_unique(out, seen, e, PolyClassTag::DumasSparse);
                    else if (classes.count("bonciocat") &&
                             bonciocat_irreducible(e))
                        push_unique(out, seen, e, PolyClassTag::Bonciocat);
                }

    if (classes.count("sweep")) {
        // every monic X^n + a_k X^k + ... + a_0 with k <= n/2,
        // |a_i| <= inner_cap, 0 < |a_0| <= coeff_cap
        const unsigned h = n / 2;
        const long icap = req.inner_cap.get_si();
        std::vector<long> inner(h, -icap);
        bool more = true;
        while (more) {
            for (long a0 = -cap; a0 <= cap; ++a0) {
                if (a0 == 0) continue;
                IntVec v(n + 1, Int(0));
                v[n] = 1;
                v[0] = a0;
                for (unsigned i = 1; i <= h; ++i) v[i] = inner[i - 1];
                IntPoly e(std::move(v));
                PolyClassTag tag = classify(e);
                if (tag == PolyClassTag::Unknown &&
                    irreducible_over_z(e) == Irreducibility::Reducible)
                    continue;
                push_unique(out, seen, std::move(e), tag);
            }
            unsigned i = 0;
            more = false;
            while (i < h) {
                if (inner[i] < icap) {
                    ++inner[i];
                    more = true;
                    break;
                }
                inner[i++] = -icap;
            }
        }
    }
    return out;
}

PmnsRecord make_record(const PmnsBasis& basis, PolyClassTag tag) {
    PmnsRecord r;
    r.p = basis.p.get_str();
    r.n = basis.n;
    r.gamma = basis.gamma.get_str();
    for (unsigned i = 0; i <= basis.n; ++i)
        r.E_coeffs.push_back(basis.E.coeff(i).get_str());
    r.rho = basis.rho.get_str();
    r.rho_bits = static_cast<unsigned>(bit_length(basis.rho));
    r.norm1 = basis.basis.norm1.get_str();
    r.strategy = to_string(basis.basis.strategy);
    for (const auto& [st, nn] : basis.strategy_norms)
        r.strategy_norms[to_string(st)] = nn.get_str();
    r.s = basis.s.get_str();
    for (const IntVec& row : basis.basis.B) {
        std::vector<std::string> cells;
        for (const Int& v : row) cells.push_back(v.get_str());
        r.basis_rows.push_back(std::move(cells));
    }
    r.class_tag = to_string(tag);
    return r;
}

std::string record_to_json(const PmnsRecord& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["n"] = r.n;
    j["gamma"] = r.gamma;
    j["E_coeffs"] = r.E_coeffs;
    j["rho"] = r.rho;
    j["rho_bits"] = r.rho_bits;
    j["norm1"] = r.norm1;
    j["strategy"] = r.strategy;
    j["strategy_norms"] = r.strategy_norms;
    j["s"] = r.s;
    j["basis_rows"] = r.basis_rows;
    j["class_tag"] = r.class_tag;
    return j.dump();
}

PmnsRecord record_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    PmnsRecord r;
    r.p = j.at("p").get<std::string>();
    r.n = j.at("n").get<unsigned>();
    r.gamma = j.at("gamma").get<std::string>();
    r.E_coeffs = j.at("E_coeffs").get<std::vector<std::string>>();
    r.rho = j.at("rho").get<std::string>();
    r.rho_bits = j.at("rho_bits").get<unsigned>();
    r.norm1 = j.at("norm1").get<std::string>();
    r.strategy = j.at("strategy").get<std::string>();
    r.strategy_norms =
        j.at("strategy_norms").get<std::map<std::string, std::string>>();
    r.s = j.at("s").get<std::string>();
    r.basis_rows =
        j.at("basis_rows").get<std::vector<std::vector<std::string>>>();
    r.class_tag = j.at("class_tag").get<std::string>();
    return r;
}

namespace {

struct Keyed {
    Int rho;
    IntPoly e;
    Int gamma;
    PmnsRecord rec;

    bool operator<(const Keyed& o) const {
        if (rho != o.rho) return rho < o.rho;
        if (!(e == o.e)) return e < o.e;
        return gamma < o.gamma;
    }
};

StrategyPolicy policy_for(const GenerationRequest& req, bool certified) {
    StrategyPolicy pol;
    if (!req.strategies.empty()) {
        pol.lll = req.strategies.count(Strategy::LllA) > 0;
        pol.shortvec = req.strategies.count(Strategy::ShortVecCompanion) > 0;
        pol.block = req.strategies.count(Strategy::BlockLattice) > 0;
    }
    if (!certified) {
        pol.shortvec = false;
        pol.block = false;
        pol.lll = true;  // the 1-norm certificate needs no irreducibility
    }
    pol.e_irreducible = certified ? Irreducibility::Irreducible
                                  : Irreducibility::Unknown;
    return pol;
}

std::vector<Keyed> process_candidate(const GenerationRequest& req,
                                     const IntPoly& e, PolyClassTag tag,
                                     unsigned long seed) {
    std::vector<Keyed> out;
    ModCtx ctx(req.p);
    RootReport roots = find_roots(e, ctx, seed);
    if (roots.roots.empty()) return out;
    bool certified = tag != PolyClassTag::Unknown ||
                     irreducible_over_z(e) == Irreducibility::Irreducible;
    StrategyPolicy pol = policy_for(req, certified);
    for (const Int& gamma : roots.roots) {
        PmnsBasis basis = new_basis(req.p, req.n, gamma, e, pol);
        if (req.rho_max_bits && bit_length(basis.rho) > *req.rho_max_bits)
            continue;
        out.push_back({basis.rho, e, gamma, make_record(basis, tag)});
    }
    return out;
}

std::vector<PmnsRecord> finalize(std::vector<std::vector<Keyed>>& shards) {
    std::vector<Keyed> all;
    for (auto& s : shards)
        for (auto& k : s) all.push_back(std::move(k));
    std::sort(all.begin(), all.end());
    std::vector<PmnsRecord> out;
    out.reserve(all.size());
    for (auto& k : all) out.push_back(std::move(k.rec));
    return out;
}

}  // namespace

std::vector<PmnsRecord> generate_serial(const GenerationRequest& req) {
    if (!is_probable_prime(req.p)) throw NotPrime("generate: p is not prime");
    auto candidates = enumerate_candidates(req);
    std::vector<std::vector<Keyed>> shards(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        shards[i] = process_candidate(req, candidates[i].first,
                                      candidates[i].second,
                                      mix_seed(req.seed, i));
    return finalize(shards);
}

std::vector<PmnsRecord> generate_parallel(const GenerationRequest& req) {
    if (!is_probable_prime(req.p)) throw NotPrime("generate: p is not prime");
    auto candidates = enumerate_candidates(req);
    std::vector<std::vector<Keyed>> shards(candidates.size());
#ifdef _OPENMP
    if (req.jobs > 0) omp_set_num_threads(req.jobs);
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < candidates.size(); ++i)
        shards[i] = process_candidate(req, candidates[i].first,
                                      candidates[i].second,
                                      mix_seed(req.seed, i));
    return finalize(shards);
}

std::vector<PmnsRecord> generate(const GenerationRequest& req) {
    return req.jobs == 1 ? generate_serial(req) : generate_parallel(req);
}

CheckReport check_record(const PmnsRecord& r, unsigned trials,
                         unsigned long seed) {
    CheckReport rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        rep.first_failure = what;
        return rep;
    };
    try {
        Int p(r.p, 10);
        Int gamma(r.gamma, 10);
        Int rho(r.rho, 10);
        Int s_claim(r.s, 10);
        unsigned n = r.n;
        if (n < 2 || r.E_coeffs.size() != n + 1) return fail("BadShape");
        IntVec ec;
        for (const auto& cstr : r.E_coeffs) ec.emplace_back(cstr, 10);
        IntPoly e(std::move(ec));
        if (!is_probable_prime(p)) return fail("NotPrime");
        if (!(gamma > 0 && gamma < p)) return fail("BadGamma");
        ModCtx ctx(p);
        if (e.eval_mod(gamma, ctx) != 0) return fail("NotARoot");
        if (r.basis_rows.size() != n) return fail("BadBasisShape");
        IntMatrix B;
        for (const auto& row : r.basis_rows) {
            if (row.size() != n) return fail("BadBasisShape");
            IntVec rv;
            for (const auto& cstr : row) rv.emplace_back(cstr, 10);
            B.push_back(std::move(rv));
        }
        for (const IntVec& row : B) {
            IntPoly w{IntVec(row)};
            if (w.eval_mod(gamma, ctx) != 0) return fail("RowNotInLattice");
        }
        Int d = abs(det(B));
        if (d == 0 || d % p != 0) return fail("BadDeterminant");
        Int n1 = norm1(B);
        if (!(2 * rho > n1)) return fail("RhoBound");
        Int cap;
        mpz_pow_ui(cap.get_mpz_t(), Int(2 * rho - 1).get_mpz_t(), n);
        if (cap < p) return fail("RedundancyBound");
        if (s_matrix(e).s != s_claim) return fail("SBound");

        // arithmetic trials against the integer oracle
        PmnsBasis basis;
        basis.p = p;
        basis.n = n;
        basis.gamma = gamma;
        basis.E = e;
        basis.basis = {B, n1, Strategy::Raw, d};
        basis.rho = rho;
        basis.s = s_claim;
        basis.babai = BabaiContext::build(B);
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(seed);
        for (unsigned t = 0; t < trials; ++t) {
            Int a = rng.get_z_range(p);
            Int b = rng.get_z_range(p);
            PmnsElem xa = to_pmns(a, basis);
            PmnsElem xb = to_pmns(b, basis);
            if (from_pmns(xa, basis) != a) return fail("RoundTrip");
            if (from_pmns(pmns_add(xa, xb, basis), basis) != (a + b) % p)
                return fail("AddOracle");
            if (from_pmns(pmns_mul(xa, xb, basis), basis) != a * b % p)
                return fail("MulOracle");
            IntPoly da{IntVec(xa.digits)};
            if (da.infinity_norm() >= rho) return fail("DigitBound");
        }
    } catch (const Error& err) {
        return fail(err.what());
    }
    return rep;
}

}  // namespace pmns
