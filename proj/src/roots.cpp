#include "pmns/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pmns {

std::string to_string(RootMethod m) {
    switch (m) {
        case RootMethod::GcdFrobenius: return "gcd_frobenius";
        case RootMethod::CyclotomicShortcut: return "cyclotomic";
        case RootMethod::BinomialCount: return "binomial";
    }
    return "gcd_frobenius";
}

IntPoly cyclotomic(unsigned m) {
    if (m == 0) throw Error("cyclotomic: m must be >= 1");
    // Phi_m = (X^m - 1) / prod_{d | m, d < m} Phi_d, exact division over Z.
    static std::map<unsigned, IntPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    IntVec num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    IntPoly r(std::move(num));
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        IntPoly phi = cyclotomic(d);
        // exact monic division r / phi
        IntPoly q;
        q.c.assign(static_cast<std::size_t>(r.degree() - phi.degree()) + 1,
                   Int(0));
        IntPoly rem = r;
        for (int k = rem.degree(); k >= phi.degree(); --k) {
            Int coef = rem.coeff(static_cast<std::size_t>(k));
            if (coef == 0) continue;
            q.c[static_cast<std::size_t>(k - phi.degree())] = coef;
            for (int i = 0; i <= phi.degree(); ++i)
                rem.c[static_cast<std::size_t>(k - phi.degree() + i)] -=
                    coef * phi.c[static_cast<std::size_t>(i)];
        }
        q.trim();
        r = std::move(q);
    }
    cache[m] = r;
    return r;
}

static ModPoly gcd_with_frobenius(const IntPoly& e, const ModCtx& ctx) {
    ModPoly frob = frobenius_power(e, ctx);
    ModPoly x;
    x.p = ctx.p;
    x.c = {Int(0), Int(1)};
    ModPoly f = modpoly_sub(frob, x);  // X^p - X mod E mod p
    ModPoly em = to_mod(e, ctx);
    if (f.is_zero()) return modpoly_make_monic(em);
    return modpoly_gcd(f, em);
}

Int count_roots(const IntPoly& e, const ModCtx& ctx) {
    if (!e.is_monic()) throw NotMonic("count_roots: E not monic");
    if (e.degree() < 2) throw Error("count_roots: deg E must be >= 2");
    if (ctx.p < 2 * e.degree()) {
        Int cnt = 0;
        for (Int x = 0; x < ctx.p; ++x)
            if (e.eval_mod(x, ctx) == 0) ++cnt;
        return cnt;
    }
    return gcd_with_frobenius(e, ctx).degree();
}

namespace {

// Equal-degree splitting of a squarefree product of linears mod p.
void split_linear(const ModPoly& d, const ModCtx& ctx, gmp_randclass& rng,
                  std::vector<Int>& out) {
    if (d.degree() <= 0) return;
    if (d.degree() == 1) {
        // monic X + c0 -> root -c0
        out.push_back(ctx.reduce(-d.c[0]));
        return;
    }
    Int half = (ctx.p - 1) / 2;
    for (;;) {
        Int a = rng.get_z_range(ctx.p);
        ModPoly shifted;
        shifted.p = ctx.p;
        shifted.c = {a, Int(1)};
        ModPoly pw = modpoly_powmod(shifted, half, d);
        ModPoly one;
        one.p = ctx.p;
        one.c = {Int(1)};
        ModPoly h = modpoly_sub(pw, one);
        if (h.is_zero()) continue;
        ModPoly g = modpoly_gcd(h, d);
        if (g.degree() > 0 && g.degree() < d.degree()) {
            split_linear(g, ctx, rng, out);
            split_linear(modpoly_divexact(d, g), ctx, rng, out);
            return;
        }
    }
}

}  // namespace

RootReport find_roots(const IntPoly& e, const ModCtx& ctx, unsigned long seed) {
    if (!e.is_monic()) throw NotMonic("find_roots: E not monic");
    if (e.degree() < 2) throw Error("find_roots: deg E must be >= 2");
    RootReport rep;
    if (ctx.p < 2 * e.degree()) {
        for (Int x = 0; x < ctx.p; ++x)
            if (e.eval_mod(x, ctx) == 0) rep.roots.push_back(x);
        rep.count = static_cast<long>(rep.roots.size());
        return rep;
    }
    ModPoly d = gcd_with_frobenius(e, ctx);
    rep.count = d.degree();
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    split_linear(d, ctx, rng, rep.roots);
    std::sort(rep.roots.begin(), rep.roots.end());
    return rep;
}

Int cyclo_root_count(unsigned m, const ModCtx& ctx) {
    if (m < 3) throw Error("cyclo_root_count: m must be >= 3");
    if ((ctx.p - 1) % m == 0) {
        unsigned long phi = 0;
        for (unsigned k = 1; k <= m; ++k)
            if (std::gcd(k, m) == 1) ++phi;
        return Int(phi);
    }
    return count_roots(cyclotomic(m), ctx);
}

Int binomial_root_count(unsigned n, const Int& c, const ModCtx& ctx) {
    if (ctx.reduce(c) == 0)
        throw ZeroInput("binomial_root_count: c = 0 mod p");
    ResidueTest t = nth_residue_test(-c, Int(n), ctx);
    return t.has_roots ? t.d : Int(0);
}

}  // namespace pmns
