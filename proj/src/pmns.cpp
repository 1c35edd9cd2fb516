#include "pmns/pmns.hpp"

#include <algorithm>
#include <cassert>

namespace pmns {

namespace {

IntPoly digits_to_poly(const IntVec& d) {
    return IntPoly(IntVec(d.begin(), d.end()));
}

IntVec poly_to_digits(const IntPoly& p, unsigned n) {
    IntVec d(n, Int(0));
    for (unsigned i = 0; i < n; ++i) d[i] = p.coeff(i);
    return d;
}

void check_same_basis(const PmnsElem& x, const PmnsBasis& basis) {
    if (x.digits.size() != basis.n)
        throw BasisMismatch("pmns: element size does not match basis");
}

}  // namespace

PmnsBasis new_basis(const Int& p, unsigned n, const Int& gamma,
                    const IntPoly& E, const StrategyPolicy& policy) {
    if (!is_probable_prime(p)) throw NotPrime("new_basis: p is not prime");
    if (!E.is_monic() || E.degree() != static_cast<int>(n) || n < 2)
        throw Error("new_basis: E must be monic of degree n >= 2");
    if (!(gamma > 0 && gamma < p)) throw BadGamma("new_basis: 0 < gamma < p");
    ModCtx ctx(p);
    if (E.eval_mod(gamma, ctx) != 0)
        throw NotARoot("new_basis: E(gamma) != 0 mod p");

    Irreducibility irr = policy.e_irreducible;
    if (irr == Irreducibility::Unknown &&
        (policy.shortvec || policy.block))
        irr = irreducible_over_z(E);
    const bool certified = irr == Irreducibility::Irreducible;

    IntMatrix A = build_A(p, gamma, n);
    std::vector<ReducedBasis> candidates;

    IntMatrix lll;
    if (policy.lll || policy.shortvec) lll = lll_reduce(A);

    if (policy.lll) {
        ReducedBasis rb;
        rb.B = lll;
        rb.norm1 = norm1(rb.B);
        rb.strategy = Strategy::LllA;
        rb.det_abs = abs(det(rb.B));
        candidates.push_back(std::move(rb));
    }
    if (policy.shortvec && certified) {
        ReducedBasis best;
        best.norm1 = -1;
        for (const IntVec& v : lll) {
            try {
                IntMatrix B = basis_from_short_vector(v, E);
                Int nn = norm1(B);
                if (best.norm1 < 0 || nn < best.norm1) {
                    best.B = std::move(B);
                    best.norm1 = nn;
                }
            } catch (const NotInvertible&) {
                // row shares a factor with E over Q; not usable as V
            }
        }
        if (best.norm1 >= 0) {
            best.strategy = Strategy::ShortVecCompanion;
            best.det_abs = abs(det(best.B));
            candidates.push_back(std::move(best));
        }
    }
    if (policy.block && certified) {
        ReducedBasis rb;
        rb.B = basis_from_block_lattice(A, E);
        rb.norm1 = norm1(rb.B);
        rb.strategy = Strategy::BlockLattice;
        rb.det_abs = abs(det(rb.B));
        candidates.push_back(std::move(rb));
    }
    if (candidates.empty()) throw Error("new_basis: no strategy enabled");

    PmnsBasis out;
    out.p = p;
    out.n = n;
    out.gamma = gamma;
    out.E = E;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        out.strategy_norms[candidates[i].strategy] = candidates[i].norm1;
        if (candidates[i].norm1 < candidates[best_idx].norm1) best_idx = i;
    }
    out.basis = std::move(candidates[best_idx]);
    out.rho = rho_from_norm1(out.basis.norm1);
    out.s = s_matrix(E).s;
    out.babai = BabaiContext::build(out.basis.B);

    // lattice membership and determinant invariants
    for (const IntVec& row : out.basis.B) {
        Int acc = 0, pw = 1;
        for (unsigned i = 0; i < n; ++i) {
            acc = (acc + row[i] * pw) % p;
            pw = pw * gamma % p;
        }
        if (ctx.reduce(acc) != 0)
            throw Error("new_basis: basis row not in the lattice");
    }
    if (out.basis.det_abs % p != 0)
        throw Error("new_basis: det not a multiple of p");
    // necessary condition p <= (2 rho - 1)^n
    Int cap;
    mpz_pow_ui(cap.get_mpz_t(), Int(2 * out.rho - 1).get_mpz_t(), n);
    if (cap < p) throw Error("new_basis: (2 rho - 1)^n < p");
    return out;
}

PmnsElem to_pmns(const Int& a, const PmnsBasis& basis) {
    if (a < 0 || a >= basis.p) throw OutOfRange("to_pmns: a not in [0, p)");
    IntVec t(basis.n, Int(0));
    t[0] = a;
    return {babai_reduce(t, basis.babai)};
}

Int from_pmns(const PmnsElem& x, const PmnsBasis& basis) {
    check_same_basis(x, basis);
    ModCtx ctx(basis.p);
    return digits_to_poly(x.digits).eval_mod(basis.gamma, ctx);
}

PmnsElem pmns_add(const PmnsElem& x, const PmnsElem& y, const PmnsBasis& basis) {
    check_same_basis(x, basis);
    check_same_basis(y, basis);
    IntVec sum(basis.n);
    for (unsigned i = 0; i < basis.n; ++i) sum[i] = x.digits[i] + y.digits[i];
    return {babai_reduce(sum, basis.babai)};
}

PmnsElem pmns_mul(const PmnsElem& x, const PmnsElem& y, const PmnsBasis& basis) {
    check_same_basis(x, basis);
    check_same_basis(y, basis);
    IntPoly prod = poly_mul(digits_to_poly(x.digits), digits_to_poly(y.digits));
    IntPoly red = poly_mod(prod, basis.E);
    // growth bound of the polynomial reduction step
    assert(red.infinity_norm() < basis.s * Int(basis.n) * basis.rho * basis.rho);
    return {babai_reduce(poly_to_digits(red, basis.n), basis.babai)};
}

namespace {

// Visit every digit vector with infinity norm < rho.
template <typename F>
void for_each_digit_vector(unsigned n, const Int& rho, F&& f) {
    long r = rho.get_si();
    std::vector<long> digits(n, -(r - 1));
    IntVec cur(n);
    for (;;) {
        for (unsigned i = 0; i < n; ++i) cur[i] = digits[i];
        f(cur);
        unsigned i = 0;
        while (i < n && digits[i] == r - 1) digits[i++] = -(r - 1);
        if (i == n) break;
        ++digits[i];
    }
}

void guard_enumeration(unsigned n, const Int& rho) {
    Int total;
    mpz_pow_ui(total.get_mpz_t(), Int(2 * rho - 1).get_mpz_t(), n);
    if (total > 100000000)
        throw TooLarge("enumerate_representations: (2 rho - 1)^n > 1e8");
}

}  // namespace

std::vector<PmnsElem> enumerate_representations(const Int& a,
                                                const PmnsBasis& basis,
                                                const Int& rho) {
    guard_enumeration(basis.n, rho);
    ModCtx ctx(basis.p);
    std::vector<PmnsElem> out;
    for_each_digit_vector(basis.n, rho, [&](const IntVec& d) {
        if (digits_to_poly(d).eval_mod(basis.gamma, ctx) == a)
            out.push_back({d});
    });
    return out;
}

std::vector<std::vector<PmnsElem>> representation_table(const PmnsBasis& basis,
                                                        const Int& rho) {
    guard_enumeration(basis.n, rho);
    ModCtx ctx(basis.p);
    std::vector<std::vector<PmnsElem>> table(basis.p.get_ui());
    for_each_digit_vector(basis.n, rho, [&](const IntVec& d) {
        Int v = digits_to_poly(d).eval_mod(basis.gamma, ctx);
        table[v.get_ui()].push_back({d});
    });
    return table;
}

}  // namespace pmns
