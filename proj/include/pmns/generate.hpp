#pragma once

#include "pmns/classes.hpp"
#include "pmns/pmns.hpp"
#include "pmns/types.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pmns {

// Class tags accepted by the generator. "sweep" enumerates every
// E = X^n + a_k X^k + ... + a_0 with k <= n/2, |a_i| <= inner_cap and
// 0 < |a_0| <= coeff_cap, filtered by the class predicates plus the
// generic irreducibility fallback.
extern const std::set<std::string> kAllClasses;

struct GenerationRequest {
    Int p;
    unsigned n = 0;
    std::set<std::string> classes;  // empty = all named classes (not sweep)
    Int coeff_cap = 8;
    Int inner_cap = 1;  // sweep only: cap on a_1..a_k
    std::optional<unsigned> rho_max_bits;
    std::set<Strategy> strategies;  // empty = all applicable
    unsigned long seed = 0;
    int jobs = 1;
};

struct PmnsRecord {
    std::string p;
    unsigned n = 0;
    std::string gamma;
    std::vector<std::string> E_coeffs;  // ascending, signed decimal
    std::string rho;
    unsigned rho_bits = 0;
    std::string norm1;
    std::string strategy;
    std::map<std::string, std::string> strategy_norms;
    std::string s;
    std::vector<std::vector<std::string>> basis_rows;
    std::string class_tag;
};

std::string record_to_json(const PmnsRecord& r);
PmnsRecord record_from_json(const std::string& line);

PmnsRecord make_record(const PmnsBasis& basis, PolyClassTag tag);

// Candidate reduction polynomials for the request, deduplicated, paired
// with the class that claimed them. Deterministic order.
std::vector<std::pair<IntPoly, PolyClassTag>> enumerate_candidates(
    const GenerationRequest& req);

// Serial reference sweep: for each candidate with roots mod p, one record
// per root, best strategy, filtered by rho_max_bits, sorted by
// (rho, E, gamma).
std::vector<PmnsRecord> generate_serial(const GenerationRequest& req);

// OpenMP sweep sharded over candidate indices; per-candidate seeds are
// derived from (seed, index), so output is identical to generate_serial
// for any thread count.
std::vector<PmnsRecord> generate_parallel(const GenerationRequest& req);

// Dispatches on req.jobs.
std::vector<PmnsRecord> generate(const GenerationRequest& req);

struct CheckReport {
    bool ok = true;
    std::string first_failure;  // empty when ok
};

// Re-validates every PmnsBasis invariant of a record and runs random
// add/mul comparisons against the big-integer oracle.
CheckReport check_record(const PmnsRecord& r, unsigned trials,
                         unsigned long seed);

}  // namespace pmns
