#pragma once

#include "pmns/modint.hpp"
#include "pmns/poly.hpp"
#include "pmns/types.hpp"

#include <string>
#include <vector>

namespace pmns {

enum class RootMethod { GcdFrobenius, CyclotomicShortcut, BinomialCount };

std::string to_string(RootMethod m);

struct RootReport {
    Int count;
    std::vector<Int> roots;  // ascending, each in [1, p)
    RootMethod method = RootMethod::GcdFrobenius;
};

// deg gcd(X^p - X mod E, E) mod p. Throws NotMonic.
Int count_roots(const IntPoly& e, const ModCtx& ctx);

// All distinct roots of E in Z/pZ via equal-degree splitting of
// gcd(X^p - X, E); deterministic for a fixed seed, output sorted ascending.
RootReport find_roots(const IntPoly& e, const ModCtx& ctx, unsigned long seed);

// phi(m) when m | p-1, else the root count of Phi_m by the general method.
Int cyclo_root_count(unsigned m, const ModCtx& ctx);

// gcd(n, p-1) if -c is an n-th power residue, else 0. Throws ZeroInput when
// c = 0 mod p.
Int binomial_root_count(unsigned n, const Int& c, const ModCtx& ctx);

// The m-th cyclotomic polynomial (m <= a few hundred suffices here).
IntPoly cyclotomic(unsigned m);

}  // namespace pmns
