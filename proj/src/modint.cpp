#include "pmns/modint.hpp"

namespace pmns {

Int round_div_half_away(const Int& num, const Int& den) {
    // den > 0 assumed. floor((2|num| + den) / (2 den)) rounds half up on the
    // magnitude, i.e. half away from zero once the sign is restored.
    Int mag = ::abs(num);
    Int q = (2 * mag + den) / (2 * den);
    return num < 0 ? Int(-q) : q;
}

ModCtx::ModCtx(Int modulus) : p(std::move(modulus)) {
    if (p < 3) throw Error("ModCtx: modulus must be >= 3");
}

Int ModCtx::reduce(const Int& x) const {
    Int r = x % p;
    if (r < 0) r += p;
    return r;
}

Int mod_exp(const Int& base, const Int& exp, const ModCtx& ctx) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
             ctx.p.get_mpz_t());
    return r;
}

Int mod_inv(const Int& a, const ModCtx& ctx) {
    Int r;
    Int ar = ctx.reduce(a);
    if (mpz_invert(r.get_mpz_t(), ar.get_mpz_t(), ctx.p.get_mpz_t()) == 0)
        throw NotInvertible("mod_inv: gcd(a, p) != 1");
    return r;
}

ResidueTest nth_residue_test(const Int& a, const Int& n, const ModCtx& ctx) {
    Int ar = ctx.reduce(a);
    if (ar == 0) throw ZeroInput("nth_residue_test: a = 0 mod p");
    Int pm1 = ctx.p - 1;
    Int d = gcd(n, pm1);
    Int e = pm1 / d;
    bool has = mod_exp(ar, e, ctx) == 1;
    return {d, has};
}

bool is_probable_prime(const Int& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 64) != 0;
}

}  // namespace pmns
