#pragma once

#include "pmns/poly.hpp"
#include "pmns/types.hpp"

#include <string>
#include <vector>

namespace pmns {

// Row-major; rows are the basis vectors.
using IntMatrix = std::vector<IntVec>;

// Basis of the lattice of degree-<n polynomials vanishing at gamma mod p:
// row 0 = (p,0,...,0), row i = X^i - gamma X^{i-1}. det = p.
IntMatrix build_A(const Int& p, const Int& gamma, unsigned n);

// Same lattice, rows X^i - gamma^i.
IntMatrix build_A_prime(const Int& p, const Int& gamma, unsigned n);

// Max column sum of absolute values.
Int norm1(const IntMatrix& m);

// Smallest integer strictly exceeding norm1/2.
Int rho_from_norm1(const Int& n1);

// Bareiss fraction-free determinant (square matrices).
Int det(const IntMatrix& m);

// Exact-integer LLL (Cohen alg. 2.6.3), delta = 99/100. Rows may live in a
// dimension larger than the row count. Throws RankDeficient.
IntMatrix lll_reduce(IntMatrix m);

// Row i = coefficients of X^i V(X) mod E(X) (companion-matrix powers).
// Throws ZeroVector; NotInvertible when gcd(V, E) over Q is nontrivial.
IntMatrix basis_from_short_vector(const IntVec& v, const IntPoly& e);

// Block-lattice strategy: embed A as D = (A | A C | ... | A C^{n-1}), reduce,
// take the row whose n blocks give the smallest 1-norm basis.
IntMatrix basis_from_block_lattice(const IntMatrix& A, const IntPoly& e);

enum class Strategy { LllA, ShortVecCompanion, BlockLattice, Raw };

std::string to_string(Strategy s);

struct ReducedBasis {
    IntMatrix B;
    Int norm1;
    Strategy strategy = Strategy::Raw;
    Int det_abs;
};

// Exact Babai round-off data: Bt * adj = det * I.
struct BabaiContext {
    IntMatrix bt;    // B transposed
    IntMatrix adj;   // adjugate of Bt, scaled so det > 0
    Int det;         // det of Bt, > 0
    unsigned n = 0;

    static BabaiContext build(const IntMatrix& B);
};

// t - Bt * round(adj(Bt) t / det); infinity norm <= norm1(B)/2 and the
// difference from t lies in the lattice. Throws DimensionMismatch.
IntVec babai_reduce(const IntVec& t, const BabaiContext& ctx);

}  // namespace pmns
