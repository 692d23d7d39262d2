#include <gtest/gtest.h>

#include "cremona/poly.hpp"

using namespace cremona;

static HomPoly P(const char* s) { return HomPoly::parse(s); }

TEST(Poly, Basic) {
    EXPECT_EQ((P("x") * P("y")).str(), "x*y");
    HomPoly z = P("x*y") + P("-x*y");
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), 2);
    EXPECT_EQ(P("x+y") * P("x-y"), P("x^2-y^2"));
    EXPECT_THROW(P("x") + P("x^2"), Error);
}

TEST(Poly, Substitute) {
    std::array<HomPoly, 3> s = {P("y*z"), P("x*z"), P("x*y")};
    EXPECT_EQ(P("x").substitute(s), P("y*z"));
    EXPECT_EQ(P("x*y*z").substitute(s), P("x^2*y^2*z^2"));
    std::array<HomPoly, 3> id = {P("x"), P("y"), P("z")};
    EXPECT_EQ(P("x+y+z").substitute(id), P("x+y+z"));
}

TEST(Poly, Gcd) {
    EXPECT_EQ(poly_gcd(P("x^2*y*z"), P("x*y^2*z")), P("x*y*z"));
    EXPECT_EQ(poly_gcd(P("x^2-y^2"), P("x-y")), P("x-y"));
    EXPECT_EQ(poly_gcd({P("x^2*y*z"), P("x*y^2*z"), P("x*y*z^2")}), P("x*y*z"));
    HomPoly a = P("x^3 + 2*x*y*z - 7/3*z^3 + y^2*z"), b = P("y^2 - 5*x*z + 3*x^2"), c = P("x^2 + x*y - y*z");
    EXPECT_EQ(poly_gcd(a * b, c * b), b.monic());
    EXPECT_EQ(poly_gcd({a * b * b, c * b, b * b * c}), b.monic());
    EXPECT_TRUE(poly_gcd(a, c).degree() == 0);
    // no pure power term, forces a sheared chart
    HomPoly u = P("x*y + y*z + x*z"), v = P("x*y*z + 2*x^2*y - y^2*z");
    EXPECT_EQ(poly_gcd(u * v, u * P("x*y - 3*x*z")), u.monic());
}

TEST(Poly, GcdQuadraticField) {
    HomPoly a = HomPoly::parse("x + sqrt(-3)*y - z"), b = HomPoly::parse("x^2 + (1+sqrt(-3))*y*z");
    HomPoly c = HomPoly::parse("y^2 - 1/2*sqrt(-3)*x*z");
    EXPECT_EQ(poly_gcd(a * b, a * c), a.monic());
    EXPECT_EQ(poly_gcd(a * b * c, b * c * c), (b * c).monic());
}

TEST(Poly, Exact) {
    EXPECT_FALSE(divide_exact(P("x^2+y^2"), P("x+y")).has_value());
    EXPECT_EQ(*divide_exact(P("x^3-y^3"), P("x-y")), P("x^2+x*y+y^2"));
}

TEST(Poly, Jacobian) {
    EXPECT_EQ(jacobian_det({P("y*z"), P("x*z"), P("x*y")}), P("2*x*y*z"));
    EXPECT_EQ(jacobian_det({P("x^2"), P("x*y"), P("y^2-x*z")}), P("-2*x^3"));
    EXPECT_EQ(jacobian_det({P("x"), P("y"), P("z")}).degree(), 0);
    EXPECT_TRUE(jacobian_det({P("x^2"), P("x^2"), P("y*z")}).is_zero());
}

TEST(Poly, Cubic) {
    auto f = factor_linear_cubic(P("2*x*y*z"), 0);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->size(), 3u);
    auto g = factor_linear_cubic(P("-2*x^3"), 0);
    ASSERT_TRUE(g);
    ASSERT_EQ(g->size(), 1u);
    EXPECT_EQ((*g)[0].mult, 3);
    EXPECT_FALSE(factor_linear_cubic(P("x^3+y^3+z^3-3*x*y*z"), 0));
    auto h = factor_linear_cubic(P("x^3+y^3+z^3-3*x*y*z"), -3);
    ASSERT_TRUE(h);
    EXPECT_EQ(h->size(), 3u);
    auto k = factor_linear_cubic(P("(x+2*y-z)*(3*x-y+5*z)^2"), 0);
    ASSERT_TRUE(k);
    ASSERT_EQ(k->size(), 2u);
}

TEST(Poly, Roots) {
    UPoly p({Scalar(-2), Scalar(0), Scalar(1)});
    EXPECT_FALSE(roots_in_field(p, 0).complete);
    EXPECT_TRUE(roots_in_field(p, 2).complete);
    // (t-1/3)(t+2)(t-5)(t^2+1)
    UPoly q = UPoly({Scalar(Rational(-1, 3)), Scalar(1)}) * UPoly({Scalar(2), Scalar(1)}) * UPoly({Scalar(-5), Scalar(1)}) *
              UPoly({Scalar(1), Scalar(0), Scalar(1)});
    auto r = roots_in_field(q, 0);
    EXPECT_EQ(r.roots.size(), 3u);
    EXPECT_FALSE(r.complete);
    auto r2 = roots_in_field(q, -1);
    EXPECT_EQ(r2.roots.size(), 5u);
    EXPECT_TRUE(r2.complete);
}

TEST(Poly, Line) {
    auto pl = parametrize_line(LinearForm(Scalar(1), Scalar(0), Scalar(0)));
    EXPECT_TRUE(pl[0].is_zero());
    LinearForm L(Scalar(1), Scalar(1), Scalar(1));
    EXPECT_TRUE(L.poly().substitute(parametrize_line(L)).is_zero());
    auto p2 = parametrize_line(LinearForm(Scalar(0), Scalar(1), Scalar(-1)));
    EXPECT_EQ(p2[0], P("x"));
    EXPECT_EQ(p2[1], P("y"));
    EXPECT_EQ(p2[2], P("y"));
}

TEST(Poly, RoundTrip) {
    HomPoly a = HomPoly::parse("3*x^2*y - 1/2*z^3 + (2 + sqrt(5))*x*y*z");
    EXPECT_EQ(HomPoly::parse(a.str()), a);
    BiPoly b = BiPoly::parse("x + (y + x^2)^2 - 3");
    EXPECT_EQ(BiPoly::parse(b.str()), b);
}
