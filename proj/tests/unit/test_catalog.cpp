#include <gtest/gtest.h>

#include <cmath>

#include "cremona/catalog.hpp"
#include "cremona/numerics.hpp"

using namespace cremona;

static Scalar Q(long p, long q = 1) { return Scalar(Rational(p, q)); }

TEST(Catalog, PhiJ) {
    auto p3 = phi_j(3, Q(2));
    EXPECT_EQ(p3.first, Q(3));
    EXPECT_EQ(p3.second, Q(3, 2));
    auto p1 = phi_j(1, Q(2));
    EXPECT_EQ(p1.first, Q(-22, 9));
    EXPECT_EQ(p1.second, Q(-31, 12));
    auto p2 = phi_j(2, Q(2));
    EXPECT_EQ(p2.first, Q(14, 9));
    EXPECT_EQ(p2.second, Q(7, 6));
    EXPECT_THROW(phi_j(2, Q(1)), Error);
    EXPECT_THROW(phi_j(1, Q(-1)), Error);
    // j = (-1 + sqrt(-3))/2
    Scalar j = (Q(-1) + Scalar::sqrt_of(-3)) / Q(2);
    EXPECT_THROW(phi_j(3, j), Error);
}

TEST(Catalog, Families) {
    EXPECT_EQ(chi_n(7), IntPoly({-1, 0, 1, 1, 0, 0, 0, 0, -1, -1, 0, 1}));
    for (int n = 0; n < 12; ++n) {
        EXPECT_EQ(chi_n(n).lead(), 1);
        EXPECT_EQ(chi_n(n).coeff(0), -1);
    }
    EXPECT_EQ(chi_nk(3, 2), IntPoly({1, -2, -2, 1}));
    EXPECT_EQ(chi_nk(2, 2), IntPoly({1, -1}).pow(2));
    EXPECT_EQ(chi_nk(4, 3), IntPoly({1, -3, -3, -3, 1}));
    // P_{3,2} by hand: t(t^6-1)(t^3-2t^2+1)/((t^3-1)(t-1)) + 1
    //   = t(t^3+1)(t^2-t-1) + 1
    EXPECT_EQ(p_nm(3, 2), IntPoly({0, 1}) * IntPoly({1, 0, 0, 1}) * IntPoly({-1, -1, 1}) + IntPoly{1});
    EXPECT_NO_THROW(p_nm(4, 1));
    EXPECT_NO_THROW(p_nm(5, 2));
    EXPECT_THROW(p_nm(2, 1), Error);
    // chi_n dominant root increases toward 1.3247
    double prev = 0;
    for (int n = 7; n <= 20; ++n) {
        double r = dominant_root_modulus(chi_n(n));
        EXPECT_GT(r, prev);
        EXPECT_LT(r, 1.32471795724);
        prev = r;
    }
    EXPECT_NEAR(prev, 1.32471795724, 2.5e-3);
}

TEST(Catalog, Matrices) {
    auto M = cat::m_sigma();
    EXPECT_EQ(M * M, IntMatrix::identity(4));
    auto b7 = cat::bk_matrix(7);
    EXPECT_EQ(b7.dim(), 11);
    EXPECT_EQ(b7.rows()[0], (std::vector<long long>{2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(b7.rows()[3], (std::vector<long long>{-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1}));
    EXPECT_EQ(b7(4, 3), 1);
    EXPECT_EQ(b7(10, 9), 1);
    for (int n = 7; n <= 10; ++n)
        EXPECT_NEAR(spectral_radius(cat::bk_matrix(n)), dominant_root_modulus(chi_n(n)), 1e-9) << n;
    for (auto m : {cat::phi3_16(), cat::psi_16(), cat::bk_c1_16()}) EXPECT_EQ(char_poly(m), cat::sixteen_charpoly());
}

TEST(Catalog, InvariantCubic) {
    auto P = invariant_cubic(Q(5, 3), Q(2), Q(-7));
    EXPECT_EQ(P.degree(), 3);
    auto [a, b] = phi_j(3, Q(2));
    auto P2 = invariant_cubic(Q(2), a, b);
    auto comp = P2.substitute(cat::f_ab(a, b).components());
    auto q = divide_exact(comp, P2);
    ASSERT_TRUE(q);
    // quotient x (3x + 2y)(3x + z) up to scalar
    HomPoly x = HomPoly::var(0), y = HomPoly::var(1), z = HomPoly::var(2);
    HomPoly ref = x * (x.scaled(Q(3)) + y.scaled(Q(2))) * (x.scaled(Q(3)) + z);
    EXPECT_EQ(q->monic(), ref.monic());
}

TEST(Catalog, VnResidual) {
    Scalar a(3), b(-2);
    auto r = vn_residual(a, b, 0);
    EXPECT_EQ(r.q, ProjPoint(Q(1), Q(-3), Q(0)));
    EXPECT_EQ(r.p_star, ProjPoint(Q(1), Q(2), Q(-3)));
    EXPECT_FALSE(r.on_vn);
    auto t = is_contracted_line(cat::f_ab(a, b), LinearForm::from_poly(HomPoly::var(0).scaled(a) + HomPoly::var(2)));
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, r.q);
    auto r3 = vn_residual(a, b, 3);
    EXPECT_EQ(r3.orbit.size(), 4u);
    // numeric residual agrees with the exact orbit
    auto num = vn_residual_numeric({3, 0}, {-2, 0}, 3);
    ComplexF u = embed_complex(r3.orbit[3][1] / r3.orbit[3][0]) + ComplexF(-2, 0);
    EXPECT_NEAR(std::abs(num[0] - u), 0, 1e-9);
}

TEST(Catalog, McMullen) {
    auto z = mcmullen_residual(Q(0), Q(0), 3);
    for (auto& c : z) EXPECT_TRUE(c.is_zero());
    auto w = mcmullen_residual(Q(1), Q(0), 3);
    EXPECT_FALSE(w[0].is_zero() && w[1].is_zero() && w[2].is_zero());
}

TEST(Catalog, VerifyAll) {
    auto names = catalog_names();
    EXPECT_GE(names.size(), 20u);
    for (auto& n : names) {
        auto r = verify_entry(n);
        EXPECT_TRUE(r.all_pass()) << n;
    }
    EXPECT_THROW(verify_entry("nope"), Error);
}
