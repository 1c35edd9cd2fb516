#pragma once

#include "pmns/poly.hpp"
#include "pmns/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pmns {

enum class PolyClassTag {
    Cyclo,
    Quadrinomial,
    Trinomial,
    Binomial,
    PrimeCst,
    Perron,
    DumasSparse,
    Bonciocat,
    Unknown,
};

std::string to_string(PolyClassTag t);
PolyClassTag class_tag_from_string(const std::string& s);

struct SuitabilityReport {
    PolyClassTag irreducible_by = PolyClassTag::Unknown;
    bool sparse_ok = false;        // every inner exponent <= n/2
    bool small_coeffs_ok = false;  // |a_i| <= coeff_cap
    Int s;                         // 1-norm of the stacked X^i mod E matrix
};

// Shape items of the suitability definition; irreducible_by is filled by
// matching the class predicates below. Throws NotMonic.
SuitabilityReport is_suitable_shape(const IntPoly& e, const Int& coeff_cap);

// One-sided criteria: true => irreducible over Z; false = inconclusive.
bool dumas_irreducible(const IntPoly& e);
bool bonciocat_irreducible(const IntPoly& e);
bool trinomial_irreducible(unsigned n, unsigned m, int beta, int delta);
bool binomial_irreducible(unsigned n, const Int& c);

// Exact equivalence (Finch-Jones): true <=> X^a + beta X^b + gamma X^c + delta
// is irreducible over Z. Signs in {-1, +1}. Throws BadExponents.
bool quadrinomial_irreducible(unsigned a, unsigned b, unsigned c,
                              int beta, int gamma, int delta);

// The suitable cyclotomic polynomials of degree n (empty unless n = 2^i 3^j,
// i >= 1).
std::vector<IntPoly> cyclo_suitable(unsigned n);

// X^n + sum eps_i X^i +- mu, eps in {-1,0,1}, i = 1..n/2, mu prime,
// mu > 1 + sum|eps_i|. Throws NotPrime.
std::vector<IntPoly> primecst_enumerate(unsigned n, const Int& mu);

// X^n + sum_{i=2}^{n/2} eps_i X^i + a1 X +- 1 with |a1| > 2 + sum|eps_i|.
// Throws ZeroInput when a1 = 0.
std::vector<IntPoly> perron_enumerate(unsigned n, const Int& a1);

enum class Irreducibility { Irreducible, Reducible, Unknown };

// Generic fallback for candidates matching no class: rational-root screen,
// bounded low-degree factor search, then factor-degree analysis modulo
// several small primes.
Irreducibility irreducible_over_z(const IntPoly& e);

// Class membership of e, first match wins (Cyclo, Binomial, Trinomial,
// Quadrinomial, PrimeCst, Perron, DumasSparse, Bonciocat).
PolyClassTag classify(const IntPoly& e);

// Trial-division factorization, prime bound 10^6. nullopt when a cofactor
// above the bound remains.
std::optional<std::vector<std::pair<Int, unsigned>>> factor_small(const Int& v);

}  // namespace pmns
