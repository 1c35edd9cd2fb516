#include "pmns/classes.hpp"

#include "pmns/modint.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>

namespace pmns {

std::string to_string(PolyClassTag t) {
    switch (t) {
        case PolyClassTag::Cyclo: return "cyclo";
        case PolyClassTag::Quadrinomial: return "quadrinomial";
        case PolyClassTag::Trinomial: return "trinomial";
        case PolyClassTag::Binomial: return "binomial";
        case PolyClassTag::PrimeCst: return "primecst";
        case PolyClassTag::Perron: return "perron";
        case PolyClassTag::DumasSparse: return "dumas";
        case PolyClassTag::Bonciocat: return "bonciocat";
        case PolyClassTag::Unknown: return "unknown";
    }
    return "unknown";
}

PolyClassTag class_tag_from_string(const std::string& s) {
    for (PolyClassTag t : {PolyClassTag::Cyclo, PolyClassTag::Quadrinomial,
                           PolyClassTag::Trinomial, PolyClassTag::Binomial,
                           PolyClassTag::PrimeCst, PolyClassTag::Perron,
                           PolyClassTag::DumasSparse, PolyClassTag::Bonciocat})
        if (to_string(t) == s) return t;
    return PolyClassTag::Unknown;
}

std::optional<std::vector<std::pair<Int, unsigned>>> factor_small(const Int& v) {
    Int m = abs(v);
    std::vector<std::pair<Int, unsigned>> out;
    if (m <= 1) return out;
    auto strip = [&](const Int& q) {
        unsigned e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        if (e) out.emplace_back(q, e);
    };
    strip(2);
    for (Int q = 3; q * q <= m && q <= 1000000; q += 2) strip(q);
    if (m > 1) {
        if (m <= 1000000 * Int(1000000) && is_probable_prime(m)) {
            out.emplace_back(m, 1);
        } else if (m > 1000000 * Int(1000000)) {
            return std::nullopt;
        } else {
            out.emplace_back(m, 1);  // cofactor below bound^2 is prime
        }
    }
    return out;
}

SuitabilityReport is_suitable_shape(const IntPoly& e, const Int& coeff_cap) {
    if (!e.is_monic()) throw NotMonic("is_suitable_shape: E not monic");
    int n = e.degree();
    if (n < 2) throw Error("is_suitable_shape: deg E must be >= 2");
    SuitabilityReport rep;
    rep.sparse_ok = true;
    rep.small_coeffs_ok = true;
    for (int i = 1; i < n; ++i) {
        if (e.coeff(static_cast<std::size_t>(i)) != 0 && 2 * i > n)
            rep.sparse_ok = false;
    }
    for (int i = 0; i < n; ++i) {
        if (abs(e.coeff(static_cast<std::size_t>(i))) > coeff_cap)
            rep.small_coeffs_ok = false;
    }
    rep.s = s_matrix(e).s;
    rep.irreducible_by = classify(e);
    return rep;
}

static unsigned valuation(Int v, const Int& q) {
    unsigned e = 0;
    v = abs(v);
    while (v != 0 && v % q == 0) {
        v /= q;
        ++e;
    }
    return e;
}

bool dumas_irreducible(const IntPoly& e) {
    if (!e.is_monic()) throw NotMonic("dumas_irreducible: E not monic");
    int n = e.degree();
    if (n < 1) return false;
    const Int& a0 = e.coeff(0);
    if (a0 == 0) return false;
    auto fac = factor_small(a0);
    if (!fac) return false;
    for (const auto& [mu, alpha] : *fac) {
        if (gcd(Int(alpha), Int(n)) != 1) continue;
        bool ok = true;
        for (int i = 1; i < n && ok; ++i) {
            const Int& ai = e.coeff(static_cast<std::size_t>(i));
            if (ai == 0) continue;
            // need mu^ceil(alpha (n-i)/n) | a_i
            unsigned need =
                static_cast<unsigned>((alpha * (n - i) + n - 1) / n);
            if (valuation(ai, mu) < need) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

bool bonciocat_irreducible(const IntPoly& e) {
    if (!e.is_monic()) throw NotMonic("bonciocat_irreducible: E not monic");
    int n = e.degree();
    const Int& a0 = e.coeff(0);
    if (a0 == 0) return false;
    auto fac = factor_small(a0);
    if (!fac) return false;
    // alpha_j is pinned to the exact valuation in a0 by mu^(alpha+1) ∤ a0;
    // a prime qualifies when that power also divides every inner coefficient.
    std::vector<unsigned> alphas;
    for (const auto& [mu, alpha] : *fac) {
        bool ok = true;
        for (int i = 1; i < n && ok; ++i) {
            const Int& ai = e.coeff(static_cast<std::size_t>(i));
            if (ai == 0) continue;
            if (valuation(ai, mu) < alpha) ok = false;
        }
        if (ok) alphas.push_back(alpha);
    }
    if (alphas.size() < 2) return false;
    Int g = n;
    for (unsigned a : alphas) g = gcd(g, Int(a));
    return g == 1;
}

bool trinomial_irreducible(unsigned n, unsigned m, int beta, int delta) {
    if (!(n > 2 * m && m > 0))
        throw BadExponents("trinomial_irreducible: need n > 2m > 0");
    (void)beta;
    (void)delta;
    unsigned d = std::gcd(n, m);
    unsigned n1 = n / d, m1 = m / d;
    return (n1 + m1) % 3 != 0;
}

bool binomial_irreducible(unsigned n, const Int& c) {
    if (abs(c) < 2) throw BadConstant("binomial_irreducible: need |c| >= 2");
    auto fac = factor_small(c);
    if (!fac) return false;
    Int g = n;
    for (const auto& [q, e] : *fac) g = gcd(g, Int(e));
    return g == 1;
}

bool quadrinomial_irreducible(unsigned a, unsigned b, unsigned c,
                              int beta, int gamma, int delta) {
    if (!(a > b && b > c && c > 0))
        throw BadExponents("quadrinomial_irreducible: need a > b > c > 0");
    unsigned g = std::gcd(a, std::gcd(b, c));
    unsigned t = 0;
    while (g % 2 == 0) {
        g /= 2;
        ++t;
    }
    unsigned pw = 1u << t;
    unsigned ap = a / pw, bp = b / pw, cp = c / pw;
    unsigned abar = std::gcd(ap, bp - cp);
    unsigned bbar = std::gcd(bp, ap - cp);
    unsigned cbar = std::gcd(cp, ap - bp);
    auto nz = [](unsigned x, unsigned mod) { return x % (2 * mod) != 0; };
    if (beta == 1 && gamma == 1 && delta == 1)
        return (abar % 2) && (bbar % 2) && (cbar % 2);
    if (beta == -1 && gamma == 1 && delta == 1)
        return nz(bp - cp, abar) && nz(bp, bbar) && nz(ap - bp, cbar);
    if (beta == 1 && gamma == -1 && delta == 1)
        return nz(bp - cp, abar) && nz(ap - cp, bbar) && nz(cp, cbar);
    if (beta == 1 && gamma == 1 && delta == -1)
        return nz(ap, abar) && nz(bp, bbar) && nz(cp, cbar);
    if (beta == -1 && gamma == -1 && delta == -1)
        return nz(ap, abar) && nz(ap - cp, bbar) && nz(ap - bp, cbar);
    // Remaining sign patterns have coefficient sum zero, so X = 1 is a root.
    return false;
}

std::vector<IntPoly> cyclo_suitable(unsigned n) {
    if (n < 2) throw Error("cyclo_suitable: n must be >= 2");
    unsigned a = 0, b = 0, m = n;
    while (m % 2 == 0) {
        m /= 2;
        ++a;
    }
    while (m % 3 == 0) {
        m /= 3;
        ++b;
    }
    std::vector<IntPoly> out;
    if (m != 1 || a == 0) return out;
    auto make = [&](long mid) {
        IntVec v(n + 1, Int(0));
        v[0] = 1;
        v[n] = 1;
        if (mid != 0) v[n / 2] = mid;
        return IntPoly(std::move(v));
    };
    if (b == 0) out.push_back(make(0));     // Phi_{2n} = X^n + 1
    if (a == 1) out.push_back(make(1));     // Phi_{3n/2} = X^n + X^{n/2} + 1
    out.push_back(make(-1));                // Phi_{3n} = X^n - X^{n/2} + 1
    return out;
}

// Mixed-radix walk over {-1,0,1}^width, deterministic order.
static bool next_eps(std::vector<int>& eps) {
    for (auto& v : eps) {
        if (v < 1) {
            ++v;
            return true;
        }
        v = -1;
    }
    return false;
}

std::vector<IntPoly> primecst_enumerate(unsigned n, const Int& mu) {
    if (n < 2) throw Error("primecst_enumerate: n must be >= 2");
    if (!is_probable_prime(mu)) throw NotPrime("primecst_enumerate: mu not prime");
    unsigned h = n / 2;
    std::vector<IntPoly> out;
    std::vector<int> eps(h, -1);
    bool more = true;
    while (more) {
        Int sum = 0;
        for (int v : eps) sum += std::abs(v);
        if (mu > 1 + sum) {
            for (int sign : {+1, -1}) {
                IntVec v(n + 1, Int(0));
                v[n] = 1;
                for (unsigned i = 1; i <= h; ++i) v[i] = eps[i - 1];
                v[0] = sign * mu;
                out.emplace_back(std::move(v));
            }
        }
        more = next_eps(eps);
    }
    return out;
}

std::vector<IntPoly> perron_enumerate(unsigned n, const Int& a1) {
    if (n < 2) throw Error("perron_enumerate: n must be >= 2");
    if (a1 == 0) throw ZeroInput("perron_enumerate: a1 must be nonzero");
    unsigned h = n / 2;
    std::vector<IntPoly> out;
    std::vector<int> eps(h >= 2 ? h - 1 : 0, -1);  // indices 2..h
    bool more = true;
    while (more) {
        Int sum = 0;
        for (int v : eps) sum += std::abs(v);
        if (abs(a1) > 2 + sum) {
            for (int sign : {+1, -1}) {
                IntVec v(n + 1, Int(0));
                v[n] = 1;
                for (unsigned i = 2; i <= h; ++i) v[i] = eps[i - 2];
                v[1] = a1;
                v[0] = sign;
                out.emplace_back(std::move(v));
            }
        }
        more = next_eps(eps);
    }
    return out;
}

// ---- classification ----

static bool sign_unit(const Int& v) { return v == 1 || v == -1; }

PolyClassTag classify(const IntPoly& e) {
    if (!e.is_monic() || e.degree() < 2) return PolyClassTag::Unknown;
    unsigned n = static_cast<unsigned>(e.degree());

    for (const IntPoly& c : cyclo_suitable(n))
        if (c == e) return PolyClassTag::Cyclo;

    std::vector<unsigned> nz;  // nonzero inner exponents, descending
    for (int i = static_cast<int>(n) - 1; i >= 0; --i)
        if (e.coeff(static_cast<std::size_t>(i)) != 0)
            nz.push_back(static_cast<unsigned>(i));

    const Int& a0 = e.coeff(0);

    if (nz.size() == 1 && nz[0] == 0 && abs(a0) >= 2 &&
        binomial_irreducible(n, a0))
        return PolyClassTag::Binomial;

    if (nz.size() == 2 && nz[1] == 0 && sign_unit(e.coeff(nz[0])) &&
        sign_unit(a0) && n > 2 * nz[0] &&
        trinomial_irreducible(n, nz[0], static_cast<int>(e.coeff(nz[0]).get_si()),
                              static_cast<int>(a0.get_si())))
        return PolyClassTag::Trinomial;

    if (nz.size() == 3 && nz[2] == 0 && sign_unit(e.coeff(nz[0])) &&
        sign_unit(e.coeff(nz[1])) && sign_unit(a0) &&
        quadrinomial_irreducible(n, nz[0], nz[1],
                                 static_cast<int>(e.coeff(nz[0]).get_si()),
                                 static_cast<int>(e.coeff(nz[1]).get_si()),
                                 static_cast<int>(a0.get_si())))
        return PolyClassTag::Quadrinomial;

    // PrimeCst: inner exponents <= n/2, eps in {-1,0,1}, prime constant.
    {
        bool shape = a0 != 0;
        Int sum = 0;
        for (unsigned i = 1; i < n && shape; ++i) {
            const Int& ai = e.coeff(i);
            if (ai == 0) continue;
            if (2 * i > n || !sign_unit(ai)) shape = false;
            sum += 1;
        }
        if (shape && abs(a0) > 1 + sum && is_probable_prime(abs(a0)))
            return PolyClassTag::PrimeCst;
    }

    // Perron: constant +-1, dominant a1.
    {
        bool shape = sign_unit(a0);
        Int sum = 0;
        const Int& a1 = e.coeff(1);
        for (unsigned i = 2; i < n && shape; ++i) {
            const Int& ai = e.coeff(i);
            if (ai == 0) continue;
            if (2 * i > n || !sign_unit(ai)) shape = false;
            sum += 1;
        }
        if (shape && a1 != 0 && abs(a1) > 2 + sum) return PolyClassTag::Perron;
    }

    if (dumas_irreducible(e)) return PolyClassTag::DumasSparse;
    if (bonciocat_irreducible(e)) return PolyClassTag::Bonciocat;
    return PolyClassTag::Unknown;
}

// ---- generic fallback irreducibility ----

namespace {

// Synthetic division by a monic candidate factor; true when exact over Z.
bool divides_exactly(const IntPoly& e, const IntPoly& g) {
    IntPoly r = e;
    int n = g.degree();
    for (int d = r.degree(); d >= n; --d) {
        const Int q = r.coeff(static_cast<std::size_t>(d));
        if (q == 0) continue;
        for (int i = 0; i < n; ++i)
            r.c[static_cast<std::size_t>(d - n + i)] -=
                q * g.c[static_cast<std::size_t>(i)];
        r.c[static_cast<std::size_t>(d)] = 0;
    }
    r.trim();
    return r.degree() < n && r.is_zero();
}

std::vector<Int> signed_divisors(const Int& v) {
    std::vector<Int> out;
    Int m = abs(v);
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            Int q = m / d;
            if (q != d) {
                out.push_back(q);
                out.push_back(-q);
            }
        }
    }
    return out;
}

// Degree multiset of the factorization of e mod q via distinct-degree
// factorization; empty when the image is not squarefree.
std::vector<int> ddf_degrees(const IntPoly& e, const Int& q) {
    ModCtx ctx(q);
    ModPoly f = to_mod(e, ctx);
    if (f.degree() != e.degree()) return {};  // leading coeff vanished
    // squarefree check: gcd(f, f')
    ModPoly fp;
    fp.p = q;
    fp.c.assign(f.c.size() > 1 ? f.c.size() - 1 : 0, Int(0));
    for (std::size_t i = 1; i < f.c.size(); ++i)
        fp.c[i - 1] = Int(i) * f.c[i] % q;
    fp.trim();
    if (fp.is_zero()) return {};
    if (modpoly_gcd(f, fp).degree() != 0) return {};

    std::vector<int> degs;
    ModPoly x;
    x.p = q;
    x.c = {Int(0), Int(1)};
    ModPoly xq = x;  // x^{q^d} mod f, running
    int d = 0;
    while (2 * (d + 1) <= f.degree()) {
        ++d;
        xq = modpoly_powmod(xq, q, f);
        ModPoly diff = modpoly_sub(xq, x);
        if (diff.is_zero()) {
            // every remaining factor has degree dividing d; since we step
            // d by 1 and stripped smaller degrees, all remaining are deg d
            for (int k = 0; k < f.degree() / d; ++k) degs.push_back(d);
            f.c = {Int(1)};
            break;
        }
        ModPoly g = modpoly_gcd(diff, f);
        if (g.degree() > 0) {
            for (int k = 0; k < g.degree() / d; ++k) degs.push_back(d);
            f = modpoly_divexact(f, g);
            xq = modpoly_rem(xq, f);
        }
    }
    if (f.degree() > 0) degs.push_back(f.degree());
    return degs;
}

}  // namespace

Irreducibility irreducible_over_z(const IntPoly& e) {
    if (!e.is_monic()) return Irreducibility::Unknown;
    int n = e.degree();
    if (n < 1) return Irreducibility::Unknown;
    if (n == 1) return Irreducibility::Irreducible;
    const Int& a0 = e.coeff(0);
    if (a0 == 0) return Irreducibility::Reducible;

    // rational roots divide the constant term
    for (const Int& d : signed_divisors(a0))
        if (e.eval(d) == 0) return Irreducibility::Reducible;
    if (n <= 3) return Irreducibility::Irreducible;

    if (classify(e) != PolyClassTag::Unknown) return Irreducibility::Irreducible;

    // bounded search for monic factors of degree 2 and 3 (Cauchy root bound)
    Int R = 1 + e.infinity_norm();
    if (R <= 64) {
        long r = R.get_si();
        for (const Int& v : signed_divisors(a0)) {
            for (long u = -2 * r; u <= 2 * r; ++u) {
                IntPoly g({0, 0, 1});
                g.c[0] = v;
                g.c[1] = u;
                if (divides_exactly(e, g)) return Irreducibility::Reducible;
            }
        }
        if (n >= 6 && r <= 12) {
            for (const Int& w : signed_divisors(a0))
                for (long u = -3 * r; u <= 3 * r; ++u)
                    for (long v = -3 * r * r; v <= 3 * r * r; ++v) {
                        IntPoly g({0, 0, 0, 1});
                        g.c[0] = w;
                        g.c[1] = v;
                        g.c[2] = u;
                        if (divides_exactly(e, g))
                            return Irreducibility::Reducible;
                    }
        }
    }

    // factor-degree analysis mod small primes
    static const int kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                  41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                  89, 97, 101, 103, 107, 109, 113, 127};
    std::bitset<64> feasible;  // achievable proper factor degrees, all primes
    feasible.set();
    int used = 0;
    for (int q : kPrimes) {
        auto degs = ddf_degrees(e, Int(q));
        if (degs.empty()) continue;
        if (degs.size() == 1) return Irreducibility::Irreducible;
        std::bitset<64> sums;
        sums.set(0);
        for (int d : degs) sums |= sums << d;
        feasible &= sums;
        ++used;
        bool proper = false;
        for (int d = 1; d < n; ++d)
            if (feasible.test(static_cast<std::size_t>(d))) proper = true;
        if (!proper) return Irreducibility::Irreducible;
        if (used >= 12) break;
    }
    return Irreducibility::Unknown;
}

}  // namespace pmns
