#include <gtest/gtest.h>

#include <random>

#include "cremona/ratmap.hpp"

using namespace cremona;

static RatMap M(const char* s) { return RatMap::parse(s); }
static const char* kSigma = "y*z : x*z : x*y";
static const char* kRho = "x*y : z^2 : y*z";
static const char* kTau = "x^2 : x*y : y^2 - x*z";

TEST(RatMap, Normalize) {
    RatMap f = normalize(RatMap::parse_raw("x^2*y*z : x*y^2*z : x*y*z^2"));
    EXPECT_TRUE(f.is_identity());
    EXPECT_EQ(M(kSigma).degree(), 2);
    EXPECT_TRUE(M("x*(x+y) : y*(x+y) : z*(x+y)").is_identity());
    EXPECT_THROW(normalize(RatMap::parse_raw("x : x : x")), Error);
}

TEST(RatMap, Involutions) {
    for (auto s : {kSigma, kRho, kTau}) EXPECT_TRUE(compose(M(s), M(s)).is_identity()) << s;
}

TEST(RatMap, Inverse) {
    auto g = inverse(M(kSigma), 2);
    ASSERT_TRUE(g);
    EXPECT_EQ(*g, M(kSigma));
    auto h = inverse(M("y^2*z : x*(x*z+y^2) : y*(x*z+y^2)"), 3);
    ASSERT_TRUE(h);
    EXPECT_EQ(*h, M("y*(z^2-x*y) : z*(z^2-x*y) : x*z^2"));
    EXPECT_FALSE(inverse(M("x^2 : y^2 : z^2"), 2));
    // higher target degree still finds it
    auto k = inverse(M(kSigma), 3);
    ASSERT_TRUE(k);
    EXPECT_EQ(*k, M(kSigma));
}

TEST(RatMap, Contracted) {
    auto p = is_contracted_line(M(kSigma), LinearForm(Scalar(1), Scalar(0), Scalar(0)));
    ASSERT_TRUE(p);
    EXPECT_EQ(*p, ProjPoint(Scalar(1), Scalar(0), Scalar(0)));
    EXPECT_FALSE(is_contracted_line(RatMap::identity(), LinearForm(Scalar(1), Scalar(0), Scalar(0))));
    Scalar a(Rational(3, 7)), b(Rational(-5, 2));
    HomPoly X = HomPoly::var(0), Y = HomPoly::var(1), Z = HomPoly::var(2);
    RatMap f = normalize({X * (X.scaled(b) + Y), Z * (X.scaled(b) + Y), X * (X.scaled(a) + Z)});
    auto q = is_contracted_line(f, LinearForm(a, Scalar(0), Scalar(1)));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, ProjPoint(Scalar(1), -a, Scalar(0)));
}

TEST(RatMap, Classify) {
    EXPECT_EQ(quadratic_classify(M(kSigma)).stratum, Stratum::Sigma3);
    EXPECT_EQ(quadratic_classify(M(kRho)).stratum, Stratum::Sigma2);
    EXPECT_EQ(quadratic_classify(M(kTau)).stratum, Stratum::Sigma1);
    EXPECT_EQ(quadratic_classify(M("x^2 : y^2 : z^2")).stratum, Stratum::NotBirational);
    EXPECT_EQ(quadratic_classify(M("x : y : z")).stratum, Stratum::NotQuadratic);
    EXPECT_EQ(quadratic_classify(RatMap::parse_raw("x*(x+y) : y*(x+y) : z*(x+y)")).stratum, Stratum::Sigma0);
    // indeterminacy points conjugate over Q(i)
    RatMap g = compose(RatMap::linear({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}), M("x^2 + y^2 : x*z : y*z"));
    auto c = quadratic_classify(g);
    EXPECT_EQ(c.stratum, Stratum::FieldObstruction);
}

TEST(RatMap, Ind) {
    auto s = indeterminacy_points(M(kSigma));
    EXPECT_TRUE(s.complete);
    ASSERT_EQ(s.points.size(), 3u);
    auto r = indeterminacy_points(M(kRho));
    ASSERT_EQ(r.points.size(), 2u);
    auto t = indeterminacy_points(M(kTau));
    ASSERT_EQ(t.points.size(), 1u);
    EXPECT_EQ(t.points[0], ProjPoint(Scalar(0), Scalar(0), Scalar(1)));
    auto u = indeterminacy_points(M("x^2 + y^2 : x*z : y*z"));
    EXPECT_FALSE(u.complete);
    auto v = common_zeros({HomPoly::parse("x^2+y^2"), HomPoly::parse("x*z"), HomPoly::parse("y*z")}, -1);
    EXPECT_TRUE(v.complete);
    EXPECT_EQ(v.points.size(), 3u);
}

TEST(RatMap, LeftRight) {
    std::mt19937 rng(7);
    for (int it = 0; it < 5; ++it) {
        Mat3 A, B;
        do {
            for (auto& r : A)
                for (auto& c : r) c = Scalar(long(rng() % 7) - 3);
        } while (mat3_det(A).is_zero());
        do {
            for (auto& r : B)
                for (auto& c : r) c = Scalar(long(rng() % 7) - 3);
        } while (mat3_det(B).is_zero());
        for (auto s : {kSigma, kRho, kTau}) {
            RatMap f = compose(RatMap::linear(A), compose(M(s), RatMap::linear(B)));
            EXPECT_EQ(quadratic_classify(f).stratum, quadratic_classify(M(s)).stratum);
        }
    }
}

TEST(RatMap, Noether) {
    auto p = noether_solve(2);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0].m, (std::vector<int>{1, 1, 1}));
    for (int nu = 3; nu <= 8; ++nu) {
        auto q = noether_solve(nu, nu - 1);
        ASSERT_EQ(q.size(), 1u);
        EXPECT_EQ(q[0].m.size(), std::size_t(2 * nu - 1));
        EXPECT_TRUE(q[0].consistent());
    }
    auto e = noether_solve(8);
    bool geiser = false;
    for (auto& x : e) geiser = geiser || x.m == std::vector<int>(7, 3);
    EXPECT_TRUE(geiser);
}

TEST(RatMap, Jonq) {
    EXPECT_TRUE(jonq_to_ratmap(JonqElement::identity()).is_identity());
    JonqElement s = JonqElement::identity();
    s.vertical = {RatFunc(Scalar(0)), RatFunc(Scalar(1)), RatFunc(Scalar(1)), RatFunc(Scalar(0))};
    RatMap f = jonq_to_ratmap(s);
    EXPECT_EQ(f.degree(), 2);
    EXPECT_TRUE(compose(f, f).is_identity());
    std::mt19937 rng(3);
    auto rs = [&]() { return Scalar(long(rng() % 5) - 2); };
    auto rf = [&]() { return RatFunc(UPoly({rs(), rs()}), UPoly({Scalar(long(rng() % 3) + 1), Scalar(1)})); };
    for (int it = 0; it < 8; ++it) {
        JonqElement a, b;
        a.vertical = {rf(), rf(), rf(), rf()};
        b.vertical = {rf(), rf(), rf(), rf()};
        a.base = {Scalar(1), rs(), Scalar(0), Scalar(1)};
        b.base = {Scalar(2), Scalar(0), rs(), Scalar(1)};
        try {
            RatMap lhs = jonq_to_ratmap(jonq_compose(a, b));
            EXPECT_EQ(lhs, compose(jonq_to_ratmap(a), jonq_to_ratmap(b)));
            EXPECT_TRUE(jonq_is_identity(jonq_compose(a, jonq_inverse(a))));
        } catch (const Error& e) {
            // degenerate random vertical matrix
            EXPECT_EQ(e.code(), "ZeroMap");
        }
    }
    HomPoly phi1 = HomPoly::parse("y^2 + z^2"), phi0 = HomPoly::parse("y^3 - 2*z^3"), psi2 = HomPoly::parse("y"),
            psi1 = HomPoly::parse("y^2 + y*z");
    std::array<Scalar, 4> base = {Scalar(1), Scalar(2), Scalar(1), Scalar(3)};
    EXPECT_EQ(jonq_to_ratmap(jonq_builder(phi1, phi0, psi2, psi1, base)),
              normalize(jonq_display(phi1, phi0, psi2, psi1, base)));
}
