#include <doctest.h>

#include "pmns/poly.hpp"

#include <random>

using namespace pmns;

namespace {

IntPoly random_poly(std::mt19937& rng, int deg, int cap, bool monic) {
    IntVec c(static_cast<std::size_t>(deg) + 1);
    std::uniform_int_distribution<int> d(-cap, cap);
    for (auto& v : c) v = d(rng);
    if (monic)
        c.back() = 1;
    else if (c.back() == 0)
        c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("poly_mul basics") {
    IntPoly a{1, 1};   // X + 1
    IntPoly b{-1, 1};  // X - 1
    CHECK(poly_mul(a, b) == IntPoly{-1, 0, 1});
    CHECK(poly_mul(a, IntPoly{}).is_zero());
    IntPoly e{2, 0, 0, 1};  // X^3 + 2
    CHECK(poly_mul(e, IntPoly{1}) == e);
    CHECK(poly_mul(a, b).degree() == a.degree() + b.degree());
}

TEST_CASE("poly_mod known values") {
    IntPoly e3{2, 0, 0, 1};   // X^3 + 2
    IntPoly e4{-2, 0, 0, 0, 1};  // X^4 - 2
    CHECK(poly_mod(IntPoly::x_power(3), e3) == IntPoly{-2});
    CHECK(poly_mod(IntPoly::x_power(4), e4) == IntPoly{2});
    IntPoly low{5, -3};
    CHECK(poly_mod(low, e3) == low);
    IntPoly not_monic{1, 0, 2};
    CHECK_THROWS_AS(poly_mod(IntPoly::x_power(3), not_monic), NotMonic);
}

TEST_CASE("poly division identity (fuzz)") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly e = random_poly(rng, 2 + trial % 5, 6, true);
        IntPoly q = random_poly(rng, trial % 4, 9, false);
        IntPoly r = random_poly(rng, e.degree() - 1, 9, false);
        IntPoly t = poly_add(poly_mul(q, e), r);
        CHECK(poly_mod(t, e) == r);
    }
}

TEST_CASE("companion_apply known values") {
    IntPoly e3{2, 0, 0, 1};  // X^3 + 2
    CHECK(companion_apply({Int(1), Int(0), Int(0)}, e3) ==
          IntVec{Int(0), Int(1), Int(0)});
    CHECK(companion_apply({Int(0), Int(0), Int(1)}, e3) ==
          IntVec{Int(-2), Int(0), Int(0)});
    IntPoly e{-1, -1, 0, 1};  // X^3 - X - 1
    CHECK(companion_apply({Int(0), Int(0), Int(1)}, e) ==
          IntVec{Int(1), Int(1), Int(0)});
    CHECK_THROWS_AS(companion_apply({Int(1), Int(0)}, e3), DimensionMismatch);
}

TEST_CASE("s_matrix known values") {
    IntPoly e3{2, 0, 0, 1};  // X^3 + 2
    SMatrix s3 = s_matrix(e3);
    REQUIRE(s3.rows.size() == 5);
    CHECK(s3.rows[0] == IntVec{Int(1), Int(0), Int(0)});
    CHECK(s3.rows[1] == IntVec{Int(0), Int(1), Int(0)});
    CHECK(s3.rows[2] == IntVec{Int(0), Int(0), Int(1)});
    CHECK(s3.rows[3] == IntVec{Int(-2), Int(0), Int(0)});
    CHECK(s3.rows[4] == IntVec{Int(0), Int(-2), Int(0)});
    CHECK(s3.s == 3);

    // E = X^n + c gives s = 1 + |c|
    for (int n = 2; n <= 8; ++n) {
        for (long c : {2L, -2L, 5L, 6L, -7L}) {
            IntVec coeffs(static_cast<std::size_t>(n) + 1, Int(0));
            coeffs[0] = c;
            coeffs.back() = 1;
            CHECK(s_matrix(IntPoly(std::move(coeffs))).s == 1 + std::abs(c));
        }
    }
    IntPoly e4{-2, 0, 0, 0, 1};  // X^4 - 2
    CHECK(s_matrix(e4).s == 3);
}

TEST_CASE("companion iterates equal s_matrix rows") {
    for (IntPoly e : {IntPoly{2, 0, 0, 1}, IntPoly{1, 1, 1, 0, 0, 0, 0, 0, 1},
                      IntPoly{6, 0, 0, 0, 0, 0, 0, 0, 1},
                      IntPoly{1, 0, -1, 0, 1}}) {
        SMatrix sm = s_matrix(e);
        const unsigned n = static_cast<unsigned>(e.degree());
        IntVec v(n, Int(0));
        v[0] = 1;
        for (unsigned i = 0; i < 2 * n - 1; ++i) {
            CHECK(v == sm.rows[i]);
            v = companion_apply(v, e);
        }
    }
}

TEST_CASE("poly_mod growth bound via s (fuzz)") {
    std::mt19937 rng(777);
    for (IntPoly e : {IntPoly{2, 0, 0, 1}, IntPoly{1, 1, 1, 0, 0, 0, 0, 0, 1},
                      IntPoly{3, -1, 0, 1, 0, 1}}) {
        const int n = e.degree();
        Int s = s_matrix(e).s;
        for (int trial = 0; trial < 100; ++trial) {
            IntPoly t = random_poly(rng, 2 * n - 2, 50, false);
            Int bound = s * t.infinity_norm();
            CHECK(poly_mod(t, e).infinity_norm() <= bound);
        }
    }
}

TEST_CASE("modpoly_gcd basics") {
    ModCtx p23{Int(23)};
    IntPoly e3{2, 0, 0, 1};
    ModPoly em = to_mod(e3, p23);
    ModPoly g = modpoly_gcd(em, em);
    CHECK(g == em);  // already monic
    ModPoly a = to_mod(IntPoly{-1, 0, 1}, p23);  // X^2 - 1
    ModPoly b = to_mod(IntPoly{-1, 1}, p23);     // X - 1
    CHECK(modpoly_gcd(a, b) == b);
    ModCtx p31{Int(31)};
    ModPoly b31 = to_mod(IntPoly{-1, 1}, p31);
    CHECK_THROWS_AS(modpoly_gcd(a, b31), CtxMismatch);
}

TEST_CASE("modpoly_gcd divides both inputs (fuzz)") {
    std::mt19937 rng(31337);
    ModCtx ctx{Int(10007)};
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly pa = random_poly(rng, 2 + trial % 5, 20, false);
        IntPoly pb = random_poly(rng, 1 + trial % 4, 20, false);
        ModPoly a = to_mod(pa, ctx);
        ModPoly b = to_mod(pb, ctx);
        if (a.is_zero() || b.is_zero()) continue;
        ModPoly g = modpoly_gcd(a, b);
        CHECK(modpoly_rem(a, g).is_zero());
        CHECK(modpoly_rem(b, g).is_zero());
    }
}

TEST_CASE("modpoly_gcd matches the big worked example") {
    ModCtx ctx{Int("7826474692469460039387400099999297")};
    IntPoly e{1, 0, 1, 0, 0, 1};  // X^5 + X^2 + 1
    ModPoly frob = frobenius_power(e, ctx);
    ModPoly x;
    x.p = ctx.p;
    x.c = {Int(0), Int(1)};
    ModPoly g = modpoly_gcd(modpoly_sub(frob, x), to_mod(e, ctx));
    REQUIRE(g.degree() == 2);
    CHECK(g.coeff(2) == 1);
    CHECK(g.coeff(1) == Int("1305849998419067291000337897705258"));
    CHECK(g.coeff(0) == Int("1793073000954204546034194068098826"));
}

TEST_CASE("frobenius_power known values") {
    ModCtx p3{Int(3)};
    ModPoly f = frobenius_power(IntPoly{1, 0, 1}, p3);  // X^3 mod X^2+1 mod 3
    REQUIRE(f.degree() == 1);
    CHECK(f.coeff(1) == 2);  // -X
    CHECK(f.coeff(0) == 0);

    ModCtx p23{Int(23)};
    IntPoly e3{2, 0, 0, 1};
    ModPoly f23 = frobenius_power(e3, p23);
    // evaluate at the known root gamma = 7: X^23(7) = 7^23 = 7 (Fermat)
    Int acc = 0;
    for (int i = f23.degree(); i >= 0; --i)
        acc = (acc * 7 + f23.coeff(static_cast<std::size_t>(i))) % 23;
    CHECK(acc == 7);

    ModCtx big{Int("7826474692469460039387400099999297")};
    ModPoly fb = frobenius_power(IntPoly{1, 0, 1, 0, 0, 1}, big);
    REQUIRE(fb.degree() == 4);
    CHECK(fb.coeff(4) == Int("7322126259420098177093985099094624"));
    CHECK(fb.coeff(3) == Int("1727826215301243349042222461135262"));
    CHECK(fb.coeff(2) == Int("3438841897608126971004523506864410"));
    CHECK(fb.coeff(1) == Int("7372958503626664659096728485020295"));
    CHECK(fb.coeff(0) == Int("4167285606168530025180293516680876"));

    CHECK_THROWS_AS(frobenius_power(IntPoly{1, 0, 2}, p23), NotMonic);
}

TEST_CASE("IntPoly utilities") {
    IntPoly e{2, 0, 0, 1};
    CHECK(e.to_string() == "X^3 + 2");
    CHECK(e.eval(7) == 345);
    ModCtx p23{Int(23)};
    CHECK(e.eval_mod(7, p23) == 0);
    CHECK(e.infinity_norm() == 2);
    CHECK(IntPoly::x_power(0) == IntPoly{1});
    CHECK(IntPoly{} < e);
    CHECK(IntPoly{1, 1} < e);  // lower degree first
}
