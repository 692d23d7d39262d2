#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cremona/weyl.hpp"

using namespace cremona;

static const IntPoly kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

TEST(Weyl, Minkowski) {
    EXPECT_EQ(minkowski(basis_vec(5, 0), basis_vec(5, 0)), 1);
    EXPECT_EQ(minkowski(basis_vec(5, 1), basis_vec(5, 1)), -1);
    auto a0 = simple_roots(5)[0];
    EXPECT_EQ(minkowski(a0, a0), -2);
    EXPECT_THROW(minkowski(basis_vec(3, 0), basis_vec(4, 0)), Error);
}

TEST(Weyl, Reflect) {
    auto r = simple_roots(6);
    auto neg = r[0];
    for (auto& x : neg) x = -x;
    EXPECT_EQ(reflect(r[0], r[0]), neg);
    for (int j = 1; j < 6; ++j) EXPECT_EQ(reflect(r[j], basis_vec(6, j)), basis_vec(6, j + 1));
    LatticeVec x{3, 1, -4, 1, 5, -9, 2};
    EXPECT_EQ(reflect(r[0], reflect(r[0], x)), x);
    EXPECT_THROW(reflect(basis_vec(6, 1), x), Error);
    for (auto& a : r) {
        auto m = reflection_matrix(a);
        EXPECT_TRUE(preserves_form(m));
        EXPECT_EQ(m * m, IntMatrix::identity(7));
    }
}

TEST(Weyl, StandardElement) {
    auto w = standard_element(10);
    EXPECT_EQ(w.column(0), (LatticeVec{2, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0}));
    for (int n = 3; n <= 14; ++n) EXPECT_TRUE(preserves_form(standard_element(n))) << n;
    EXPECT_EQ(standard_element(3).column(0), (LatticeVec{2, -1, -1, -1}));
    EXPECT_THROW(standard_element(2), Error);
}

TEST(Weyl, CharPoly) {
    EXPECT_EQ(char_poly(IntMatrix::identity(3)), IntPoly({-1, 1}).pow(3));
    auto cp = char_poly(standard_element(10));
    IntPoly q;
    EXPECT_TRUE(cp.divide_exact(kLehmer, q));
    EXPECT_EQ(q, IntPoly({-1, 1}));
    for (int n : {5, 9, 12}) {
        auto m = standard_element(n);
        auto z = eval_matrix_poly(char_poly(m), m);
        EXPECT_TRUE(std::all_of(z.begin(), z.end(), [](const Integer& v) { return v == 0; })) << n;
    }
}

TEST(Weyl, SalemClassify) {
    auto p = salem_classify(IntPoly{-1, -1, 0, 1});
    EXPECT_EQ(p.cls, SalemClass::Pisot);
    EXPECT_NEAR(p.dominant_root, 1.3247179572, 1e-6);
    auto l = salem_classify(kLehmer);
    EXPECT_EQ(l.cls, SalemClass::Salem);
    EXPECT_NEAR(l.dominant_root, 1.17628081826, 1e-6);
    EXPECT_EQ(salem_classify(IntPoly{-1, 1}).cls, SalemClass::Cyclotomic);
    EXPECT_EQ(salem_classify(IntPoly{-2, 1}).cls, SalemClass::Pisot);
    EXPECT_EQ(salem_classify(IntPoly{-1, 3}).cls, SalemClass::Other);
    EXPECT_EQ(salem_classify(IntPoly{-2, 0, 1}).cls, SalemClass::Other);
    // two roots outside
    EXPECT_EQ(salem_classify(IntPoly{-1, -1, 0, 1} * IntPoly{1, -3, 1}).cls, SalemClass::Other);
    EXPECT_EQ(salem_classify(IntPoly{-1, -1, 0, 1}.pow(2)).cls, SalemClass::Pisot);
    auto c = salem_classify(kLehmer * cyclotomic(7) * IntPoly{1, 1});
    EXPECT_EQ(c.cls, SalemClass::Salem);
    EXPECT_EQ(c.residual, kLehmer);
}

TEST(Weyl, SpectralRadius) {
    for (int n : {8, 9}) EXPECT_EQ(spectral_radius(standard_element(n)), 1.0) << n;
    for (int n : {10, 11}) EXPECT_GT(spectral_radius(standard_element(n)), 1.0) << n;
    EXPECT_NEAR(spectral_radius(standard_element(10)), 1.17628081826, 1e-6);
    for (int n = 10; n <= 13; ++n)
        EXPECT_EQ(salem_classify(char_poly(standard_element(n))).cls, SalemClass::Salem) << n;
}

TEST(Weyl, CoxeterOrderingInvariance) {
    std::mt19937 rng(7);
    for (int n : {10, 11, 12}) {
        std::vector<int> ord(n);
        for (int i = 0; i < n; ++i) ord[i] = i;
        double ref = spectral_radius(coxeter_element(n, ord));
        EXPECT_GT(ref, 1.0);
        for (int t = 0; t < 10; ++t) {
            std::shuffle(ord.begin(), ord.end(), rng);
            EXPECT_NEAR(spectral_radius(coxeter_element(n, ord)), ref, 1e-9);
        }
    }
}

TEST(Weyl, GroupOrder) {
    EXPECT_EQ(group_order_bfs(3), 12u);
    EXPECT_EQ(group_order_bfs(4), 120u);
    EXPECT_EQ(group_order_bfs(5), 1920u);
    EXPECT_EQ(group_order_bfs(6), 51840u);
    EXPECT_THROW(group_order_bfs(7, 100000), Error);
    EXPECT_THROW(group_order_bfs(9), Error);
}
