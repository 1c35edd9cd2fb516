#include "pmns/poly.hpp"

#include <algorithm>
#include <sstream>

namespace pmns {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(IntVec coeffs) : c(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < c.size() ? c[i] : kZero;
}

Int IntPoly::infinity_norm() const {
    Int m = 0;
    for (const Int& v : c)
        if (abs(v) > m) m = abs(v);
    return m;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPoly::eval_mod(const Int& x, const ModCtx& ctx) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = (acc * x + *it) % ctx.p;
    return ctx.reduce(acc);
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i) {
        int cv = cmp(coeff(i), o.coeff(i));
        if (cv != 0) return cv < 0;
    }
    return false;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = coeff(i);
        if (a == 0) continue;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int m = abs(a);
        if (i == 0 || m != 1) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly IntPoly::x_power(unsigned k) {
    IntVec v(k + 1, Int(0));
    v[k] = 1;
    return IntPoly(std::move(v));
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntVec r(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntVec r(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly poly_neg(const IntPoly& a) {
    IntVec r = a.c;
    for (Int& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntVec r(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(r));
}

IntPoly poly_mod(const IntPoly& t, const IntPoly& e) {
    if (!e.is_monic()) throw NotMonic("poly_mod: divisor not monic");
    IntVec r = t.c;
    int n = e.degree();
    for (int d = static_cast<int>(r.size()) - 1; d >= n; --d) {
        if (r[d] == 0) continue;
        Int q = r[d];
        for (int i = 0; i < n; ++i) r[d - n + i] -= q * e.c[i];
        r[d] = 0;
    }
    return IntPoly(std::move(r));
}

IntVec companion_apply(const IntVec& v, const IntPoly& e) {
    const std::size_t n = static_cast<std::size_t>(e.degree());
    if (v.size() != n)
        throw DimensionMismatch("companion_apply: vector length != deg E");
    IntVec w(n, Int(0));
    const Int& top = v[n - 1];
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = (i > 0 ? v[i - 1] : Int(0)) - top * e.c[i];
    }
    return w;
}

SMatrix s_matrix(const IntPoly& e) {
    if (!e.is_monic()) throw NotMonic("s_matrix: E not monic");
    int n = e.degree();
    if (n < 2) throw Error("s_matrix: deg E must be >= 2");
    SMatrix out;
    IntVec row(static_cast<std::size_t>(n), Int(0));
    row[0] = 1;
    out.rows.push_back(row);
    for (int i = 1; i < 2 * n - 1; ++i) {
        row = companion_apply(row, e);
        out.rows.push_back(row);
    }
    Int s = 0;
    for (int j = 0; j < n; ++j) {
        Int col = 0;
        for (const auto& r : out.rows) col += abs(r[static_cast<std::size_t>(j)]);
        if (col > s) s = col;
    }
    out.s = s;
    return out;
}

// ---- ModPoly ----

void ModPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int& ModPoly::coeff(std::size_t i) const {
    return i < c.size() ? c[i] : kZero;
}

ModPoly to_mod(const IntPoly& a, const ModCtx& ctx) {
    ModPoly r;
    r.p = ctx.p;
    r.c.reserve(a.c.size());
    for (const Int& v : a.c) r.c.push_back(ctx.reduce(v));
    r.trim();
    return r;
}

static void require_same_ctx(const ModPoly& a, const ModPoly& b) {
    if (a.p != b.p) throw CtxMismatch("modpoly: modulus mismatch");
}

ModPoly modpoly_add(const ModPoly& a, const ModPoly& b) {
    require_same_ctx(a, b);
    ModPoly r;
    r.p = a.p;
    r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] = a.coeff(i) + b.coeff(i);
        if (r.c[i] >= r.p) r.c[i] -= r.p;
    }
    r.trim();
    return r;
}

ModPoly modpoly_sub(const ModPoly& a, const ModPoly& b) {
    require_same_ctx(a, b);
    ModPoly r;
    r.p = a.p;
    r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] = a.coeff(i) - b.coeff(i);
        if (r.c[i] < 0) r.c[i] += r.p;
    }
    r.trim();
    return r;
}

ModPoly modpoly_mul(const ModPoly& a, const ModPoly& b) {
    require_same_ctx(a, b);
    ModPoly r;
    r.p = a.p;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    for (Int& v : r.c) v %= r.p;
    r.trim();
    return r;
}

ModPoly modpoly_rem(const ModPoly& a, const ModPoly& b) {
    require_same_ctx(a, b);
    if (b.is_zero()) throw Error("modpoly_rem: division by zero");
    ModCtx ctx(a.p);
    Int lead_inv = mod_inv(b.c.back(), ctx);
    ModPoly r = a;
    int n = b.degree();
    for (int d = r.degree(); d >= n; --d) {
        if (r.c[static_cast<std::size_t>(d)] == 0) continue;
        Int q = r.c[static_cast<std::size_t>(d)] * lead_inv % r.p;
        for (int i = 0; i <= n; ++i) {
            Int& cell = r.c[static_cast<std::size_t>(d - n + i)];
            cell = (cell - q * b.c[static_cast<std::size_t>(i)]) % r.p;
            if (cell < 0) cell += r.p;
        }
    }
    r.trim();
    return r;
}

ModPoly modpoly_divexact(const ModPoly& a, const ModPoly& b) {
    require_same_ctx(a, b);
    if (b.is_zero()) throw Error("modpoly_divexact: division by zero");
    ModCtx ctx(a.p);
    Int lead_inv = mod_inv(b.c.back(), ctx);
    ModPoly r = a;
    ModPoly q;
    q.p = a.p;
    int n = b.degree();
    int qd = a.degree() - n;
    if (qd < 0) throw Error("modpoly_divexact: not divisible");
    q.c.assign(static_cast<std::size_t>(qd) + 1, Int(0));
    for (int d = r.degree(); d >= n; --d) {
        if (r.c[static_cast<std::size_t>(d)] == 0) continue;
        Int qc = r.c[static_cast<std::size_t>(d)] * lead_inv % r.p;
        q.c[static_cast<std::size_t>(d - n)] = qc;
        for (int i = 0; i <= n; ++i) {
            Int& cell = r.c[static_cast<std::size_t>(d - n + i)];
            cell = (cell - qc * b.c[static_cast<std::size_t>(i)]) % r.p;
            if (cell < 0) cell += r.p;
        }
    }
    r.trim();
    if (!r.is_zero()) throw Error("modpoly_divexact: not divisible");
    q.trim();
    return q;
}

ModPoly modpoly_make_monic(const ModPoly& a) {
    if (a.is_zero()) return a;
    if (a.c.back() == 1) return a;
    ModCtx ctx(a.p);
    Int inv = mod_inv(a.c.back(), ctx);
    ModPoly r = a;
    for (Int& v : r.c) v = v * inv % r.p;
    return r;
}

ModPoly modpoly_gcd(const ModPoly& a, const ModPoly& b) {
    require_same_ctx(a, b);
    if (a.is_zero() && b.is_zero())
        throw Error("modpoly_gcd: gcd(0, 0) undefined");
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = modpoly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return modpoly_make_monic(x);
}

static ModPoly modpoly_mulmod(const ModPoly& a, const ModPoly& b,
                              const ModPoly& m) {
    return modpoly_rem(modpoly_mul(a, b), m);
}

ModPoly modpoly_powmod(const ModPoly& base, const Int& exp, const ModPoly& m) {
    ModPoly r;
    r.p = m.p;
    r.c = {Int(1)};
    if (exp == 0) return r;
    ModPoly b = modpoly_rem(base, m);
    std::size_t bits = bit_length(exp);
    for (std::size_t i = bits; i-- > 0;) {
        r = modpoly_mulmod(r, r, m);
        if (mpz_tstbit(exp.get_mpz_t(), i)) r = modpoly_mulmod(r, b, m);
    }
    return r;
}

ModPoly frobenius_power(const IntPoly& e, const ModCtx& ctx) {
    if (!e.is_monic()) throw NotMonic("frobenius_power: E not monic");
    if (e.degree() < 2) throw Error("frobenius_power: deg E must be >= 2");
    ModPoly em = to_mod(e, ctx);
    ModPoly x;
    x.p = ctx.p;
    x.c = {Int(0), Int(1)};
    return modpoly_powmod(x, ctx.p, em);
}

}  // namespace pmns
