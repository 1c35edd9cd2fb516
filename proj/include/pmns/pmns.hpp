#pragma once

#include "pmns/classes.hpp"
#include "pmns/lattice.hpp"
#include "pmns/modint.hpp"
#include "pmns/poly.hpp"
#include "pmns/types.hpp"

#include <map>
#include <vector>

namespace pmns {

struct StrategyPolicy {
    bool lll = true;
    bool shortvec = true;  // requires E certified irreducible
    bool block = true;     // requires E certified irreducible

    // Unknown => run the generic fallback before enabling the sublattice
    // strategies.
    Irreducibility e_irreducible = Irreducibility::Unknown;
};

struct PmnsBasis {
    Int p;
    unsigned n = 0;
    Int gamma;
    IntPoly E;
    ReducedBasis basis;
    BabaiContext babai;
    Int rho;  // smallest integer > norm1/2
    Int s;    // coefficient-growth bound of reduction mod E
    std::map<Strategy, Int> strategy_norms;
};

struct PmnsElem {
    IntVec digits;  // length n, infinity norm < rho of the owning basis
};

// Validates p prime, E monic degree n, E(gamma) = 0 mod p; builds the
// lattice, reduces with every enabled strategy, keeps the smallest 1-norm.
PmnsBasis new_basis(const Int& p, unsigned n, const Int& gamma,
                    const IntPoly& E, const StrategyPolicy& policy = {});

// Babai reduction of (a, 0, ..., 0). Throws OutOfRange unless 0 <= a < p.
PmnsElem to_pmns(const Int& a, const PmnsBasis& basis);

// Horner evaluation at gamma, result in [0, p).
Int from_pmns(const PmnsElem& x, const PmnsBasis& basis);

PmnsElem pmns_add(const PmnsElem& x, const PmnsElem& y, const PmnsBasis& basis);

// poly_mul -> poly_mod E -> Babai; asserts the s n rho^2 growth bound on the
// intermediate.
PmnsElem pmns_mul(const PmnsElem& x, const PmnsElem& y, const PmnsBasis& basis);

// All digit vectors with infinity norm < rho evaluating to a. Guard:
// (2 rho - 1)^n <= 10^8, else TooLarge. Test/golden-table use.
std::vector<PmnsElem> enumerate_representations(const Int& a,
                                                const PmnsBasis& basis,
                                                const Int& rho);

// One pass over the whole digit cube: representation sets for every residue.
std::vector<std::vector<PmnsElem>> representation_table(const PmnsBasis& basis,
                                                        const Int& rho);

}  // namespace pmns
