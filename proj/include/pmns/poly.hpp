#pragma once

#include "pmns/modint.hpp"
#include "pmns/types.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace pmns {

// Dense integer polynomial, coefficients in ascending degree order.
// Trimmed: leading coefficient nonzero unless zero polynomial (empty coeffs).
struct IntPoly {
    IntVec c;

    IntPoly() = default;
    explicit IntPoly(IntVec coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    const Int& coeff(std::size_t i) const;  // 0 beyond degree
    Int infinity_norm() const;
    Int eval(const Int& x) const;                     // Horner over Z
    Int eval_mod(const Int& x, const ModCtx&) const;  // Horner mod p

    void trim();

    bool operator==(const IntPoly& o) const { return c == o.c; }
    // Lexicographic on (degree, coefficients high to low); used for
    // deterministic record ordering.
    bool operator<(const IntPoly& o) const;

    std::string to_string() const;  // human-readable, e.g. "X^3 + 2"

    static IntPoly x_power(unsigned k);  // X^k
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);

// Remainder of Euclidean division by monic e. Throws NotMonic.
IntPoly poly_mod(const IntPoly& t, const IntPoly& e);

// Coefficients of X * V(X) mod E(X) for len(v) = deg E. The companion
// matrix of E acts on row vectors; this is one application.
IntVec companion_apply(const IntVec& v, const IntPoly& e);

struct SMatrix {
    std::vector<IntVec> rows;  // 2n-1 rows; row i = coeffs of X^i mod E
    Int s;                     // max column sum of absolute values
};

SMatrix s_matrix(const IntPoly& e);

// Polynomial over Z/pZ, coefficients reduced into [0, p), trimmed.
struct ModPoly {
    IntVec c;
    Int p;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Int& coeff(std::size_t i) const;
    void trim();

    bool operator==(const ModPoly& o) const { return p == o.p && c == o.c; }
};

ModPoly to_mod(const IntPoly& a, const ModCtx& ctx);
ModPoly modpoly_add(const ModPoly& a, const ModPoly& b);
ModPoly modpoly_sub(const ModPoly& a, const ModPoly& b);
ModPoly modpoly_mul(const ModPoly& a, const ModPoly& b);
ModPoly modpoly_rem(const ModPoly& a, const ModPoly& b);
ModPoly modpoly_divexact(const ModPoly& a, const ModPoly& b);
ModPoly modpoly_make_monic(const ModPoly& a);

// Monic gcd in (Z/pZ)[X]. Throws CtxMismatch on differing moduli.
ModPoly modpoly_gcd(const ModPoly& a, const ModPoly& b);

// base^exp mod (m, p); left-to-right square and multiply.
ModPoly modpoly_powmod(const ModPoly& base, const Int& exp, const ModPoly& m);

// X^p mod E(X) mod p. Throws NotMonic.
ModPoly frobenius_power(const IntPoly& e, const ModCtx& ctx);

}  // namespace pmns
