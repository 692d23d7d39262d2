// one PASS/FAIL line per acceptance criterion

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/catalog.hpp"
#include "cremona/dynamics.hpp"
#include "cremona/numerics.hpp"
#include "cremona/polyaut.hpp"
#include "cremona/ratmap.hpp"
#include "cremona/weyl.hpp"

using namespace cremona;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream msg;
    void expect(bool c, const std::string& what) {
        if (!c) {
            ok = false;
            msg << " [failed: " << what << "]";
        }
    }
    void note(const std::string& s) { msg << " " << s; }
};

const double kGolden2 = (3 + std::sqrt(5.0)) / 2;

Mat3 random_linear(std::mt19937& rng) {
    std::uniform_int_distribution<int> u(-4, 4);
    for (;;) {
        Mat3 m;
        for (auto& row : m)
            for (auto& x : row) x = Scalar(u(rng));
        if (!mat3_det(m).is_zero()) return m;
    }
}

std::string fmt(double x, int prec = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    return buf;
}

void c1(Check& c) {
    c.expect(compose(cat::sigma(), cat::sigma()).is_identity(), "sigma^2");
    c.expect(compose(cat::rho(), cat::rho()).is_identity(), "rho^2");
    c.expect(compose(cat::tau(), cat::tau()).is_identity(), "tau^2");
    c.note("sigma^2 = rho^2 = tau^2 = id");
}

void c2(Check& c) {
    std::vector<std::pair<RatMap, Stratum>> cases = {
        {cat::sigma(), Stratum::Sigma3}, {cat::rho(), Stratum::Sigma2}, {cat::tau(), Stratum::Sigma1}};
    for (auto& [f, s] : cases) c.expect(quadratic_classify(f).stratum == s, f.str() + " -> " + stratum_name(s));
    RatMap sq = RatMap::parse("x^2 : y^2 : z^2");
    c.expect(quadratic_classify(sq).stratum == Stratum::NotBirational || !inverse(sq, 2), "x^2:y^2:z^2");
    std::mt19937 rng(2024);
    int n = 0;
    for (int i = 0; i < 20; ++i) {
        auto& [f, s] = cases[i % 3];
        RatMap g = compose(RatMap::linear(random_linear(rng)), compose(f, RatMap::linear(random_linear(rng))));
        Stratum got = quadratic_classify(g).stratum;
        c.expect(got == s, "conjugate " + g.str() + " gave " + stratum_name(got));
        n += got == s;
    }
    c.note("Sigma3/Sigma2/Sigma1, squares map rejected, " + std::to_string(n) + "/20 left-right samples");
}

void c3(Check& c) {
    auto inv = inverse(cat::psi(), 3);
    c.expect(inv && *inv == cat::psi_inverse_reference(), "psi inverse");
    if (inv) c.note("psi^-1 = " + inv->str());
    auto rows = cat::cubic_table_rows();
    c.expect(rows.size() >= 3, "three cubic rows");
    for (std::size_t i = 0; i < rows.size() && i < 3; ++i) {
        auto g = inverse(rows[i], 3);
        c.expect(g && g->degree() == 3 && compose(*g, rows[i]).is_identity() && compose(rows[i], *g).is_identity(),
                 "row " + rows[i].str());
    }
}

void c4(Check& c) {
    auto p2 = noether_solve(2);
    c.expect(p2.size() == 1 && p2[0].m == std::vector<int>{1, 1, 1}, "nu=2 gives (1,1,1)");
    for (int nu = 3; nu <= 8; ++nu) {
        MultiplicityProfile jq{nu, {}};
        jq.m.push_back(nu - 1);
        jq.m.insert(jq.m.end(), 2 * nu - 2, 1);
        bool found = false;
        for (auto& p : noether_solve(nu))
            if (p.m == jq.m) found = true;
        c.expect(jq.consistent() && found, "Jonquieres profile nu=" + std::to_string(nu));
    }
    bool geiser = false;
    for (auto& p : noether_solve(8))
        if (p.m == std::vector<int>(7, 3)) geiser = true;
    c.expect(geiser, "nu=8 has 3^7");
    c.note("(1,1,1); (nu-1,1^{2nu-2}) for nu=3..8; 3^7 at nu=8");
}

void c5(Check& c) {
    DegreeSequence s = degree_sequence(cat::phi_n(3), 10);
    bool all3 = s.degrees.size() == 10;
    for (long d : s.degrees) all3 = all3 && d == 3;
    c.expect(all3, "deg Phi_3^k = 3");

    RatMap fab = cat::f_alpha_beta(Scalar(Rational(2, 3)), Scalar(Rational(5, 7)));
    DegreeSequence sl = degree_sequence(fab, 12);
    GrowthClass gl = growth_classify(sl, [&](int k) { return power(fab, k).is_identity(); });
    c.expect(gl.label == Growth::Linear, "f_{2/3,5/7} linear, got " + growth_name(gl.label));

    DegreeSequence sb = degree_sequence(cat::f_ab(Scalar(1), Scalar(2)), 12);
    double lam = lambda_estimate(sb);
    c.expect(std::abs(lam - 1.32472) / 1.32472 < 0.05, "lambda(f_{1,2})");
    c.note("Phi_3 degrees 3 for k<=10; f_{alpha,beta} " + growth_name(gl.label) + "; lambda(f_{1,2}) = " + fmt(lam, 6) +
           " (" + sb.method + ")");
}

void c6(Check& c) {
    RatMap f = monomial_map({{{2, 1}, {1, 1}}});
    double lam = lambda_estimate(degree_sequence(f, 10));
    c.expect(std::abs(lam - kGolden2) / kGolden2 < 0.02, "within 2%");
    c.note("lambda = " + fmt(lam, 6) + " vs " + fmt(kGolden2, 6) + " for " + f.str());
}

void c7(Check& c) {
    PolyAut phi = PolyAut::parse("x + (y + x^2)^2 + (y + x^2)^3, y + x^2");
    auto w = jung_decompose(phi);
    c.expect(w.has_value(), "decomposes");
    if (w) {
        c.expect(w->recompose() == phi, "recompose");
        std::vector<PolyAut> want = {PolyAut::parse("x + y^2 + y^3, y"), PolyAut::swap(), PolyAut::parse("x + y^2, y"),
                                     PolyAut::swap()};
        bool same = w->factors.size() == want.size();
        for (std::size_t i = 0; same && i < want.size(); ++i) same = w->factors[i].as_aut() == want[i];
        c.expect(same, "factors " + w->str());
        c.note("Phi = " + w->str());
    }
    PolyAut printed = PolyAut::parse("y + (y + x^2)^2 + (y + x^2)^3, y + x^2");
    c.expect(!jung_decompose(printed), "printed form has jacobian " + printed.jacobian().str());
    c.note("(printed first component y + ... is NotAutomorphism)");
    PolyAut h = PolyAut::parse("y, y^2 - x");
    HenonReport r1 = henon_classify(h);
    HenonReport r2 = henon_classify(aut_compose(h, h));
    c.expect(r1.is_henon && r1.dyn_degree == 2, "h");
    c.expect(r2.is_henon && r2.dyn_degree == 4, "h^2");
    c.note("h -> (" + std::string(r1.is_henon ? "true" : "false") + ", " + std::to_string(r1.dyn_degree) + "), h^2 -> (" +
           (r2.is_henon ? "true" : "false") + ", " + std::to_string(r2.dyn_degree) + ")");
}

void c8(Check& c) {
    IntPoly cp = char_poly(standard_element(10)), q;
    c.expect(cp.divide_exact(lehmer(), q), "L(t) | charpoly");
    double rho = spectral_radius(cp);
    c.expect(std::abs(rho - 1.17628081) < 1e-6, "Lehmer root");
    c.expect(salem_classify(IntPoly({-1, -1, 0, 1})).cls == SalemClass::Pisot, "t^3 - t - 1 Pisot");
    for (int n = 3; n <= 9; ++n)
        c.expect(std::abs(spectral_radius(standard_element(n)) - 1) < 1e-6, "radius 1 at n=" + std::to_string(n));
    for (int n = 10; n <= 14; ++n)
        c.expect(spectral_radius(standard_element(n)) > 1 + 1e-6, "radius > 1 at n=" + std::to_string(n));
    const std::uint64_t orders[] = {12, 120, 1920, 51840};
    for (int n = 3; n <= 6; ++n)
        c.expect(group_order_bfs(n) == orders[n - 3], "|W_" + std::to_string(n) + "|");
    c.note("rho(w_10) = " + fmt(rho, 12) + "; radius 1 for n<=9, >1 for n=10..14; orders 12/120/1920/51840");
}

void c9(Check& c) {
    IntPoly want = IntPoly({1, -3, 1}) * IntPoly({1, -1, 1}) * IntPoly({1, 1}).pow(2) * IntPoly({1, 1, 1}).pow(3) *
                   IntPoly({-1, 1}).pow(4);
    for (auto [name, m] : {std::pair<const char*, IntMatrix>{"phi3", cat::phi3_16()}, {"psi", cat::psi_16()}}) {
        IntPoly cp = char_poly(m);
        c.expect(cp == want, std::string(name) + " charpoly");
        c.expect(std::abs(spectral_radius(m) - kGolden2) < 1e-12, std::string(name) + " radius");
    }
    for (int n = 7; n <= 10; ++n) {
        double a = spectral_radius(cat::bk_matrix(n)), b = dominant_root_modulus(chi_n(n));
        c.expect(std::abs(a - b) < 1e-9, "bk_matrix(" + std::to_string(n) + ")");
    }
    IntMatrix ms = cat::m_sigma();
    c.expect(ms * ms == IntMatrix::identity(ms.dim()), "M_sigma^2");
    c.note("both 16x16 charpolys exact, radius (3+sqrt5)/2; bk_matrix(7..10) matches chi_n; M_sigma^2 = Id");
}

void c10(Check& c) {
    RatMap ne = compose(cat::eta(), cat::e_map());
    c.expect(power(ne, 3) == cat::sigma(), "(eta e)^3 = sigma");
    RatMap hs = compose(cat::h_gizatullin(), cat::sigma());
    c.expect(power(hs, 3).is_identity(), "(h sigma)^3 = id");
    c.note("(eta e)^3 = " + power(ne, 3).str() + "; (h sigma)^3 = " + power(hs, 3).str());
}

bool conj_identity(const RatMap& F, const Mat3& phi_a, const Mat3& phi_a0, const Mat3& M) {
    RatMap lhs = compose(RatMap::linear(phi_a), F);
    RatMap inner = compose(compose(RatMap::linear(phi_a0), F), RatMap::linear(M));
    return lhs == compose(RatMap::linear(mat3_inverse(M)), inner);
}

void c11(Check& c) {
    Scalar a(1), a0(2);
    c.expect(conj_identity(cat::phi_n(3), cat::phi3_alpha(a), cat::phi3_alpha(a0), cat::conj_phi3(a, a0)), "Phi_3");
    c.expect(conj_identity(cat::psi(), cat::psi_alpha(a), cat::psi_alpha(a0), cat::conj_psi(a, a0)), "psi");
    c.expect(RatMap::linear(cat::psi_alpha(a)).field() == -3, "psi_alpha over Q(sqrt -3)");
    c.note("(alpha, alpha0) = (1, 2) for phi_alpha Phi_3 and phi_alpha psi over Q(sqrt -3)");
}

void c12(Check& c) {
    Scalar t(2);
    for (int j = 1; j <= 3; ++j) {
        auto [a, b] = phi_j(j, t);
        HomPoly P = invariant_cubic(t, a, b);
        HomPoly comp = P.substitute(cat::f_ab(a, b).components());
        c.expect(divide_exact(comp, P).has_value(), "j=" + std::to_string(j));
    }
    Scalar a(Rational(3, 7)), b(Rational(-5, 2));
    HomPoly P = invariant_cubic(t, a, b);
    HomPoly Q, R;
    divrem(P.substitute(cat::f_ab(a, b).components()), P, Q, R);
    c.expect(!R.is_zero(), "off-family remainder");
    c.note("P_{2,a,b} | P o f_{a,b} for j=1,2,3; (3/7, -5/2) leaves a remainder");
}

void c13(Check& c) {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int i = 0; i < 5; ++i) {
        Rational qa(num(rng), den(rng)), qb(num(rng), den(rng));
        qa.canonicalize();
        qb.canonicalize();
        Scalar a(qa), b(qb);
        RatMap f = cat::f_ab(a, b);
        auto t = is_contracted_line(f, LinearForm(a, Scalar(0), Scalar(1)));
        c.expect(t && *t == ProjPoint(Scalar(1), -a, Scalar(0)), "contraction at " + a.str() + ", " + b.str());
        ProjPoint ps(Scalar(1), -b, -a);
        bool in_ind = false;
        for (auto& p : indeterminacy_points(f).points) in_ind = in_ind || p == ps;
        c.expect(in_ind, "p_* in Ind f");
        try {
            c.expect(vn_residual(a, b, 3).p_star == ps, "p_* of the residual");
        } catch (const Error&) {
        }
    }
    for (auto [n, j] : {std::pair{3, 1}, {5, 2}, {7, 3}}) {
        ComplexF cc = 2 * std::cos(j * M_PI / n), w0(0.37, 0.21);
        auto orb = mobius_orbit(cc, w0, n);
        bool exact = std::abs(orb[n] - w0) < 1e-9;
        for (int k = 1; k < n; ++k) exact = exact && std::abs(orb[k] - w0) > 1e-9;
        c.expect(exact, "period " + std::to_string(n));
    }
    c.note("ax+z -> (1:-a:0) and p_* = (1:-b:-a) at 5 rational pairs; periods 3, 5, 7 exact");
}

void c14(Check& c) {
    ComplexF al = parse_complex("exp(2*i*sqrt(3))"), be = parse_complex("exp(2*i*sqrt(2))");
    CPoint seed{ComplexF(0, 1e-4), ComplexF(0, 1e-4)};
    Orbit o = iterate_family(Family::FAlphaBeta, al, be, seed, 30000);
    c.expect(!o.diverged && o.points.size() == 30000, "30000 iterates");
    double mx = 0, drift = 0;
    for (auto& p : o.points) {
        mx = std::max(mx, std::abs(p[0]));
        drift = std::max(drift, std::abs(std::abs(p[1]) - 1e-4) / 1e-4);
    }
    c.expect(mx < 0.1, "|x| < 0.1");
    c.expect(drift < 1e-9, "|y| conserved");
    c.note("max |x| = " + fmt(mx, 4) + ", |y| drift = " + fmt(drift, 3));
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Check&)>>> crit = {
        {"involutions", c1},          {"quadratic criterion", c2}, {"inverse reconstruction", c3},
        {"Noether relations", c4},    {"degree growth", c5},       {"monomial rule", c6},
        {"Jung decomposition", c7},   {"Weyl and Salem", c8},      {"catalog matrices", c9},
        {"relations", c10},           {"conjugacy identities", c11}, {"invariant cubics", c12},
        {"Bedford-Kim geometry", c13}, {"orbit figure", c14},
    };
    int failed = 0;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            crit[i].second(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.msg << " [exception: " << e.what() << "]";
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu %s:%s (%.2fs)\n", c.ok ? "PASS" : "FAIL", i + 1, crit[i].first.c_str(), c.msg.str().c_str(), sec);
        std::fflush(stdout);
        failed += !c.ok;
    }
    std::printf("%d/%zu criteria passed\n", int(crit.size()) - failed, crit.size());
    return failed ? 1 : 0;
}
