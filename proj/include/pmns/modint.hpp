#pragma once

#include "pmns/types.hpp"

namespace pmns {

// Modulus context. p must be odd and >= 3; primality is the caller's
// responsibility (new_basis runs a probable-prime check).
struct ModCtx {
    Int p;

    explicit ModCtx(Int modulus);

    Int reduce(const Int& x) const;

    bool operator==(const ModCtx& o) const { return p == o.p; }
};

// base^exp mod p (square and multiply).
Int mod_exp(const Int& base, const Int& exp, const ModCtx& ctx);

// Inverse of a mod p via extended gcd. Throws NotInvertible if gcd(a,p) != 1.
Int mod_inv(const Int& a, const ModCtx& ctx);

struct ResidueTest {
    Int d;           // gcd(n, p-1)
    bool has_roots;  // X^n = a mod p solvable; if so there are exactly d roots
};

// Power-residue test for X^n = a mod p: d = gcd(n, p-1),
// has_roots <=> a^((p-1)/d) = 1 mod p. Throws ZeroInput when a = 0 mod p.
ResidueTest nth_residue_test(const Int& a, const Int& n, const ModCtx& ctx);

// Probable-prime check, 64 rounds.
bool is_probable_prime(const Int& p);

}  // namespace pmns
