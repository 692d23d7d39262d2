#include <gtest/gtest.h>

#include <cmath>

#include "cremona/dynamics.hpp"

using namespace cremona;

static RatMap M(const char* s) { return RatMap::parse(s); }

TEST(Dynamics, Phi3Bounded) {
    auto s = degree_sequence(M("x*z^2 + y^3 : y*z^2 : z^3"), 10);
    for (long d : s.degrees) EXPECT_EQ(d, 3);
    EXPECT_EQ(lambda_estimate(s), 1.0);
    EXPECT_EQ(growth_classify(s).label, Growth::Bounded);
}

TEST(Dynamics, Sigma) {
    auto s = degree_sequence(M("y*z : x*z : x*y"), 4);
    EXPECT_EQ(s.degrees, (std::vector<long>{2, 1, 2, 1}));
    EXPECT_EQ(s.period, 2);
    auto id = degree_sequence(RatMap::identity(), 8);
    EXPECT_EQ(growth_classify(id).label, Growth::Bounded);
}

TEST(Dynamics, Monomial) {
    // (x^2 y, x y) in the chart z = 1
    auto s = degree_sequence(M("x^2*y : x*y*z : z^3"), 10);
    long fib[25] = {0, 1};
    for (int i = 2; i < 25; ++i) fib[i] = fib[i - 1] + fib[i - 2];
    for (int k = 1; k <= 10; ++k) EXPECT_EQ(s.degrees[k - 1], fib[2 * k + 2]);
    EXPECT_NEAR(lambda_estimate(s), (3 + std::sqrt(5.0)) / 2, 0.02 * 2.618);
}

TEST(Dynamics, ProbeAgrees) {
    RatMap f = M("x*(2*x+y) : z*(2*x+y) : x*(x+z)");
    DynConfig c;
    c.mode = DegreeMode::Exact;
    c.budget_digits = 1u << 30;
    c.budget_work = 1e18;
    auto ex = degree_sequence(f, 9, c);
    auto pr = probe_degrees(f, 9, 5);
    EXPECT_EQ(ex.degrees, pr);
}

TEST(Dynamics, LinearGrowth) {
    auto s = degree_sequence(M("(3/7*x+y)*z : 5/3*y*(x+z) : z*(x+z)"), 12);
    auto g = growth_classify(s);
    EXPECT_EQ(g.label, Growth::Linear) << g.residuals[0] << " " << g.residuals[1] << " " << g.residuals[2];
}

TEST(Dynamics, BedfordKim) {
    auto s = degree_sequence(M("x*(2*x+y) : z*(2*x+y) : x*(x+z)"), 12);
    EXPECT_NEAR(lambda_estimate(s), 1.32472, 0.05 * 1.32472);
}

TEST(Dynamics, Henon) {
    auto s = degree_sequence(M("y*z : y^2 - x*z : z^2"), 8);
    EXPECT_NEAR(lambda_estimate(s), 2.0, 0.02);
}

TEST(Dynamics, ASigma) {
    RatMap A = RatMap::linear({{{1, 2, 1}, {1, 1, 3}, {2, 1, 1}}});
    RatMap f = compose(A, M("y*z : x*z : x*y"));
    auto s = degree_sequence(f, 10);
    auto g = growth_classify(s);
    EXPECT_EQ(g.label, Growth::Exponential);
    EXPECT_NEAR(g.lambda, 2.0, 0.05);
    auto finv = inverse(f, 2);
    ASSERT_TRUE(finv);
    auto rep = stability_probe(f, *finv, 20);
    EXPECT_TRUE(rep.collisions.empty());
    EXPECT_EQ(rep.targets.size(), 3u);
}

TEST(Dynamics, SigmaNotStable) {
    RatMap s = M("y*z : x*z : x*y");
    auto rep = stability_probe(s, s, 1);
    ASSERT_FALSE(rep.collisions.empty());
    EXPECT_EQ(rep.collisions[0].k, 0);
    auto id = stability_probe(RatMap::identity(), RatMap::identity(), 5);
    EXPECT_TRUE(id.collisions.empty());
}
