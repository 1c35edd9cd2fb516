#include "pmns/lattice.hpp"

#include <algorithm>
#include <utility>

namespace pmns {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::LllA: return "lll_a";
        case Strategy::ShortVecCompanion: return "shortvec_companion";
        case Strategy::BlockLattice: return "block_lattice";
        case Strategy::Raw: return "raw";
    }
    return "raw";
}

IntMatrix build_A(const Int& p, const Int& gamma, unsigned n) {
    if (!(gamma > 0 && gamma < p)) throw BadGamma("build_A: need 0 < gamma < p");
    if (n < 2) throw Error("build_A: n must be >= 2");
    IntMatrix m(n, IntVec(n, Int(0)));
    m[0][0] = p;
    for (unsigned i = 1; i < n; ++i) {
        m[i][i - 1] = -gamma;
        m[i][i] = 1;
    }
    return m;
}

IntMatrix build_A_prime(const Int& p, const Int& gamma, unsigned n) {
    if (!(gamma > 0 && gamma < p))
        throw BadGamma("build_A_prime: need 0 < gamma < p");
    if (n < 2) throw Error("build_A_prime: n must be >= 2");
    IntMatrix m(n, IntVec(n, Int(0)));
    m[0][0] = p;
    Int pw = 1;
    for (unsigned i = 1; i < n; ++i) {
        pw *= gamma;
        m[i][0] = -pw;
        m[i][i] = 1;
    }
    return m;
}

Int norm1(const IntMatrix& m) {
    if (m.empty()) return 0;
    Int best = 0;
    for (std::size_t j = 0; j < m[0].size(); ++j) {
        Int col = 0;
        for (const auto& row : m) col += abs(row[j]);
        if (col > best) best = col;
    }
    return best;
}

Int rho_from_norm1(const Int& n1) { return n1 / 2 + 1; }

Int det(const IntMatrix& m) {
    // Bareiss fraction-free elimination.
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (m[0].size() != n) throw DimensionMismatch("det: matrix not square");
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

namespace {

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

// Integral LLL, Cohen "A Course in Computational Algebraic Number Theory"
// alg. 2.6.3, Lovasz parameter delta = 99/100.
IntMatrix lll_reduce(IntMatrix b) {
    const int n = static_cast<int>(b.size());
    if (n == 0) return b;
    std::vector<Int> d(static_cast<std::size_t>(n) + 1);
    d[0] = 1;
    IntMatrix lam(static_cast<std::size_t>(n),
                  IntVec(static_cast<std::size_t>(n), Int(0)));

    auto red = [&](int k, int l) {
        // |lam[k][l]| must end up <= d[l+1]/2
        if (2 * abs(lam[k][l]) <= d[l + 1]) return;
        Int q = round_div_half_away(lam[k][l], d[l + 1]);
        for (std::size_t j = 0; j < b[k].size(); ++j) b[k][j] -= q * b[l][j];
        lam[k][l] -= q * d[l + 1];
        for (int i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    };

    auto swap_step = [&](int k, int kmax) {
        std::swap(b[k], b[k - 1]);
        for (int j = 0; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int l = lam[k][k - 1];
        Int B = (d[k - 1] * d[k + 1] + l * l) / d[k];
        for (int i = k + 1; i <= kmax; ++i) {
            Int t = lam[i][k];
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - l * t) / d[k];
            lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k + 1];
        }
        d[k] = B;
    };

    int k = 1, kmax = 0;
    // Gram-Schmidt for row 0
    d[1] = dot(b[0], b[0]);
    if (d[1] == 0) throw RankDeficient("lll_reduce: zero row");
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            for (int j = 0; j <= k; ++j) {
                Int u = dot(b[k], b[j]);
                for (int i = 0; i < j; ++i)
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
                if (j < k)
                    lam[k][j] = u;
                else {
                    d[k + 1] = u;
                    if (d[k + 1] == 0)
                        throw RankDeficient("lll_reduce: dependent rows");
                }
            }
        }
        for (;;) {
            red(k, k - 1);
            // Lovasz with delta = 99/100:
            // swap when 100 (d[k+1] d[k-1] + lam^2) < 99 d[k]^2
            Int lhs = 100 * (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
            Int rhs = 99 * d[k] * d[k];
            if (lhs < rhs) {
                swap_step(k, kmax);
                k = std::max(1, k - 1);
            } else {
                for (int l = k - 2; l >= 0; --l) red(k, l);
                ++k;
                break;
            }
        }
    }
    return b;
}

IntMatrix basis_from_short_vector(const IntVec& v, const IntPoly& e) {
    const unsigned n = static_cast<unsigned>(e.degree());
    if (v.size() != n)
        throw DimensionMismatch("basis_from_short_vector: length != deg E");
    bool all_zero = std::all_of(v.begin(), v.end(),
                                [](const Int& x) { return x == 0; });
    if (all_zero) throw ZeroVector("basis_from_short_vector: zero vector");
    IntMatrix m;
    m.reserve(n);
    IntVec row = v;
    m.push_back(row);
    for (unsigned i = 1; i < n; ++i) {
        row = companion_apply(row, e);
        m.push_back(row);
    }
    if (det(m) == 0)
        throw NotInvertible("basis_from_short_vector: V not invertible mod E");
    return m;
}

IntMatrix basis_from_block_lattice(const IntMatrix& A, const IntPoly& e) {
    const unsigned n = static_cast<unsigned>(e.degree());
    if (A.size() != n || A[0].size() != n)
        throw DimensionMismatch("basis_from_block_lattice: A is not n x n");
    // D row i = (A_i | A_i C | ... | A_i C^{n-1})
    IntMatrix d(n, IntVec(static_cast<std::size_t>(n) * n, Int(0)));
    for (unsigned i = 0; i < n; ++i) {
        IntVec blk = A[i];
        for (unsigned j = 0; j < n; ++j) {
            if (j > 0) blk = companion_apply(blk, e);
            for (unsigned t = 0; t < n; ++t) d[i][j * n + t] = blk[t];
        }
    }
    IntMatrix red = lll_reduce(std::move(d));
    IntMatrix best;
    Int best_norm = -1;
    for (const IntVec& row : red) {
        IntVec v0(row.begin(), row.begin() + n);
        bool zero = std::all_of(v0.begin(), v0.end(),
                                [](const Int& x) { return x == 0; });
        if (zero) continue;
        IntMatrix cand(n, IntVec(n));
        for (unsigned j = 0; j < n; ++j)
            for (unsigned t = 0; t < n; ++t) cand[j][t] = row[j * n + t];
        Int nn = norm1(cand);
        if (best_norm < 0 || nn < best_norm) {
            best_norm = nn;
            best = std::move(cand);
        }
    }
    if (best.empty())
        throw NoUsableRow("basis_from_block_lattice: all rows have V0 = 0");
    return best;
}

BabaiContext BabaiContext::build(const IntMatrix& B) {
    const std::size_t n = B.size();
    BabaiContext ctx;
    ctx.n = static_cast<unsigned>(n);
    ctx.bt.assign(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ctx.bt[i][j] = B[j][i];

    // adj = det * inverse, exact rationals
    using Rat = mpq_class;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(ctx.bt[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw RankDeficient("BabaiContext: singular basis");
        std::swap(a[k], a[piv]);
        Rat inv = 1 / a[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    Int dd = abs(pmns::det(ctx.bt));
    if (dd == 0) throw RankDeficient("BabaiContext: singular basis");
    // bt * (|det| * inv(bt)) = |det| * I, sign-independent
    ctx.det = dd;
    ctx.adj.assign(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat cell = a[i][n + j] * Rat(dd);
            cell.canonicalize();
            if (cell.get_den() != 1)
                throw Error("BabaiContext: adjugate not integral");
            ctx.adj[i][j] = cell.get_num();
        }
    return ctx;
}

IntVec babai_reduce(const IntVec& t, const BabaiContext& ctx) {
    const std::size_t n = ctx.n;
    if (t.size() != n) throw DimensionMismatch("babai_reduce: length != n");
    IntVec u(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u[i] += ctx.adj[i][j] * t[j];
    IntVec q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = round_div_half_away(u[i], ctx.det);
    IntVec r = t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i] -= ctx.bt[i][j] * q[j];
    return r;
}

}  // namespace pmns
