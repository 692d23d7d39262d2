#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cremona/intpoly.hpp"
#include "cremona/numerics.hpp"
#include "cremona/scalar.hpp"

using namespace cremona;

TEST(Scalar, Arith) {
    Scalar s = Scalar::sqrt_of(-3);
    EXPECT_EQ((Scalar(1) + s) * (Scalar(1) - s), Scalar(4));
    Scalar x = Scalar(3) + Scalar(5) * s;
    EXPECT_EQ(Scalar(0) + x, x);
    EXPECT_EQ(x / x, Scalar(1));
    EXPECT_THROW(x / Scalar(0), Error);
    EXPECT_THROW(s + Scalar::sqrt_of(5), Error);
    // perfect squares collapse
    EXPECT_TRUE(Scalar::sqrt_of(Rational(9, 4)).is_rational());
    EXPECT_EQ(Scalar::sqrt_of(8), Scalar(2) * Scalar::sqrt_of(2));
}

TEST(Scalar, FieldAxioms) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> u(-9, 9);
    auto rnd = [&] {
        int den = u(rng);
        if (den == 0) den = 1;
        Rational a(u(rng), den), b(u(rng), 7);
        a.canonicalize();
        b.canonicalize();
        return Scalar(a, b, 5);
    };
    for (int i = 0; i < 50; ++i) {
        Scalar x = rnd(), y = rnd(), z = rnd();
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), Scalar(1));
    }
}

TEST(Scalar, RoundTrip) {
    for (const char* s : {"0", "-7/3", "1/2 + 3/4*sqrt(5)", "-sqrt(-3)", "2 - 1/5*sqrt(-1)"}) {
        Scalar x = Scalar::parse(s);
        EXPECT_EQ(Scalar::parse(x.str()), x) << s;
    }
    EXPECT_EQ(Scalar::parse("sqrt(-1)"), Scalar::sqrt_of(-1));
    EXPECT_THROW(Scalar::parse("1 +"), Error);
}

TEST(Scalar, Embed) {
    ComplexF z = embed_complex(Scalar(1) + Scalar::sqrt_of(-1));
    EXPECT_DOUBLE_EQ(z.real(), 1.0);
    EXPECT_DOUBLE_EQ(z.imag(), 1.0);
    Scalar g = (Scalar(3) + Scalar::sqrt_of(5)) / Scalar(2);
    EXPECT_NEAR(embed_complex(g).real(), 2.618033988749895, 1e-12);
    EXPECT_EQ(embed_complex(Scalar(0)), ComplexF(0, 0));
    // homomorphism on products
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> u(1, 9);
    Scalar p(1);
    ComplexF pc(1);
    for (int i = 0; i < 10; ++i) {
        Rational a(u(rng), u(rng)), b(u(rng), u(rng) * 3);
        a.canonicalize();
        b.canonicalize();
        Scalar x(a, b, -3);
        p *= x;
        pc *= embed_complex(x);
    }
    EXPECT_LT(std::abs(embed_complex(p) - pc) / std::abs(pc), 1e-12);
}

TEST(Scalar, RatFunc) {
    RatFunc y = RatFunc::variable();
    RatFunc one(Scalar(1));
    EXPECT_EQ(y / (y + one) + one / (y + one), one);
    EXPECT_EQ((y * y - one) / (y - one), y + one);
    EXPECT_EQ((one / y) * y, one);
    EXPECT_THROW(one / RatFunc(Scalar(0)), Error);
}

TEST(IntPoly, Cyclotomic) {
    EXPECT_EQ(cyclotomic(1), IntPoly({-1, 1}));
    EXPECT_EQ(cyclotomic(6), IntPoly({1, -1, 1}));
    EXPECT_EQ(cyclotomic(12), IntPoly({1, 0, -1, 0, 1}));
    // X^6 - 1 = Phi1 Phi2 Phi3 Phi6
    IntPoly p = cyclotomic(1) * cyclotomic(2) * cyclotomic(3) * cyclotomic(6);
    EXPECT_EQ(p, IntPoly({-1, 0, 0, 0, 0, 0, 1}));
    IntPoly q;
    EXPECT_TRUE(p.divide_exact(cyclotomic(3), q));
    EXPECT_FALSE(p.divide_exact(IntPoly({1, 2}), q));
}

TEST(Numerics, Roots) {
    RootSet r = poly_roots(IntPoly({1, -3, 1}));
    ASSERT_EQ(r.roots.size(), 2u);
    double hi = std::max(r.roots[0].real(), r.roots[1].real());
    double lo = std::min(r.roots[0].real(), r.roots[1].real());
    EXPECT_NEAR(hi, 2.618033988749895, 1e-12);
    EXPECT_NEAR(lo, 0.381966011250105, 1e-12);
    EXPECT_NEAR(dominant_root_modulus(IntPoly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})), 1.17628081826, 1e-6);
    EXPECT_NEAR(dominant_root_modulus(IntPoly({-1, -1, 0, 1})), 1.32471795724, 1e-9);
    // root count equals degree with repetition
    RootSet m = poly_roots(IntPoly({1, -2, 1}) * IntPoly({1, -2, 1}));
    EXPECT_EQ(m.roots.size(), 4u);
    for (auto& z : m.roots) EXPECT_NEAR(std::abs(z - ComplexF(1)), 0, 1e-3);
}

TEST(Numerics, ParseComplex) {
    ComplexF a = parse_complex("exp(2*i*sqrt(3))");
    EXPECT_NEAR(a.real(), std::cos(2 * std::sqrt(3.0)), 1e-14);
    EXPECT_NEAR(a.imag(), std::sin(2 * std::sqrt(3.0)), 1e-14);
    EXPECT_EQ(parse_complex("1e-4i"), ComplexF(0, 1e-4));
    EXPECT_THROW(parse_complex("exp("), Error);
}

TEST(Numerics, OrbitSkew) {
    ComplexF al = parse_complex("exp(2*i*sqrt(3))"), be = parse_complex("exp(2*i*sqrt(2))");
    Orbit o = iterate_family(Family::FAlphaBeta, al, be, {ComplexF(0, 1e-4), ComplexF(0, 1e-4)}, 10000);
    ASSERT_EQ(o.points.size(), 10000u);
    for (auto& p : o.points) EXPECT_NEAR(std::abs(p[1]) / 1e-4, 1.0, 1e-9);
    // alpha = beta = 1 keeps |y|
    Orbit o1 = iterate_family(Family::FAlphaBeta, 1.0, 1.0, {ComplexF(0.3), ComplexF(0, 0.01)}, 100);
    for (auto& p : o1.points) EXPECT_NEAR(std::abs(p[1]), 0.01, 1e-15);
    // deterministic clouds
    auto c1 = project_cloud(o, Projection::Omega1), c2 = project_cloud(o, Projection::Omega1);
    EXPECT_EQ(c1.points.back().c, c2.points.back().c);
    EXPECT_TRUE(project_cloud(Orbit{}, Projection::Omega2).points.empty());
}

TEST(Numerics, Mobius) {
    for (auto [n, j] : {std::pair{3, 1}, {5, 2}, {7, 3}}) {
        ComplexF c = 2 * std::cos(j * M_PI / n);
        ComplexF w0(0.3, 0.2);
        auto orb = mobius_orbit(c, w0, n);
        EXPECT_LT(std::abs(orb[n] - w0), 1e-9);
        for (int k = 1; k < n; ++k) EXPECT_GT(std::abs(orb[k] - w0), 1e-6);
    }
}

TEST(Numerics, VnSolve) {
    VnSolution s = newton_solve_vn(7, ComplexF(-0.5, 0), ComplexF(-0.4, 0));
    EXPECT_LT(s.residual, 1e-10);
    EXPECT_THROW(newton_solve_vn(7, ComplexF(5, 0), ComplexF(5, 0)), Error);
}
