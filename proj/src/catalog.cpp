#include "cremona/catalog.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "cremona/dynamics.hpp"
#include "cremona/numerics.hpp"

namespace cremona {

namespace {

HomPoly X() { return HomPoly::var(0); }
HomPoly Y() { return HomPoly::var(1); }
HomPoly Z() { return HomPoly::var(2); }

// rows given sparsely, columns 1-based
IntMatrix sparse16(const std::vector<std::vector<std::pair<int, int>>>& rows) {
    IntMatrix m(16);
    for (int r = 0; r < (int)rows.size(); ++r)
        for (auto [c, v] : rows[r]) m(r, c - 1) = v;
    return m;
}

const std::vector<std::vector<std::pair<int, int>>> kShift = {{{7, 1}}, {{8, 1}}, {{9, 1}}, {{10, 1}}, {{11, 1}}};

std::vector<std::vector<std::pair<int, int>>> with_shift(std::vector<std::vector<std::pair<int, int>>> r) {
    r.insert(r.end(), kShift.begin(), kShift.end());
    return r;
}

}  // namespace

namespace cat {

RatMap sigma() { return normalize({Y() * Z(), X() * Z(), X() * Y()}); }
RatMap rho() { return normalize({X() * Y(), Z() * Z(), Y() * Z()}); }
RatMap tau() { return normalize({X() * X(), X() * Y(), Y() * Y() - X() * Z()}); }
RatMap psi() {
    HomPoly q = X() * Z() + Y() * Y();
    return normalize({Y() * Y() * Z(), X() * q, Y() * q});
}
RatMap psi_inverse_reference() {
    HomPoly q = Z() * Z() - X() * Y();
    return normalize({Y() * q, Z() * q, X() * Z() * Z()});
}
RatMap phi_n(int n) {
    if (n < 2) throw Error("BadArgument", "phi_n needs n >= 2");
    return normalize({X() * Z().pow(n - 1) + Y().pow(n), Y() * Z().pow(n - 1), Z().pow(n)});
}
RatMap eta() { return normalize({Y(), X(), Z()}); }
RatMap e_map() { return normalize({X() * Y(), X() * Z(), Y() * Z()}); }
RatMap h_gizatullin() { return normalize({X(), X() - Y(), X() - Z()}); }
RatMap f_ab(const Scalar& a, const Scalar& b) {
    HomPoly l = X().scaled(b) + Y();
    return normalize({X() * l, Z() * l, X() * (X().scaled(a) + Z())});
}
RatMap f_alpha_beta(const Scalar& alpha, const Scalar& beta) {
    HomPoly xz = X() + Z();
    return normalize({(X().scaled(alpha) + Y()) * Z(), Y().scaled(beta) * xz, Z() * xz});
}
RatMap mcmullen(const Scalar& a, const Scalar& b) {
    return normalize({(Z().scaled(a) + Y()) * X(), (X().scaled(b) + Y()) * Z(), X() * Z()});
}
RatMap henon() { return normalize({Y() * Z(), Y() * Y() - X() * Z(), Z() * Z()}); }
RatMap bk_c1() {
    return normalize({X() * Z() * Z(), Z().pow(3), X().pow(3) + Z().pow(3) - Y() * Z() * Z()});
}
std::vector<RatMap> cubic_table_rows() {
    return {normalize({X() * Z() * Z() + Y().pow(3), Y() * Z() * Z(), Z().pow(3)}),
            normalize({X().pow(3), Y() * Y() * Z(), X() * Y() * Z()}),
            normalize({X() * Z() * (X() + Y()), Y() * Z() * (X() + Y()), X() * Y() * Y()})};
}

Mat3 phi3_alpha(const Scalar& al) {
    Scalar one(1), two(2);
    return {{{al, two * (one - al), two + al - al * al}, {Scalar(-1), Scalar(0), al + one}, {one, Scalar(-2), one - al}}};
}

Mat3 psi_alpha(const Scalar& al) {
    Scalar s = Scalar::sqrt_of(-3);
    Rational r2_343(2, 343), r2_49(2, 49), r1_49(1, 49), r1_14(1, 14), r1_7(1, 7);
    Scalar a2 = al * al, a3 = a2 * al;
    Mat3 m;
    m[0] = {a3 * Scalar(r2_343) * (s * Scalar(37) + Scalar(3)), al, -(a2 * Scalar(r2_49) * (s * Scalar(5) + Scalar(11)))};
    m[1] = {a2 * Scalar(r1_49) * (Scalar(-15) + s * Scalar(11)), Scalar(1), -(al * Scalar(r1_14) * (s * Scalar(5) + Scalar(11)))};
    m[2] = {-(al * Scalar(r1_7) * (s * Scalar(2) + Scalar(3))), Scalar(0), Scalar(0)};
    return m;
}

Mat3 conj_phi3(const Scalar& al, const Scalar& al0) {
    Mat3 m = mat3_identity();
    m[0][2] = al0 - al;
    return m;
}

Mat3 conj_psi(const Scalar& al, const Scalar& al0) {
    Mat3 m = mat3_identity();
    m[1][1] = al / al0;
    m[2][2] = (al * al) / (al0 * al0);
    return m;
}

IntMatrix m_sigma() { return IntMatrix::from_rows({{2, 1, 1, 1}, {-1, 0, -1, -1}, {-1, -1, 0, -1}, {-1, -1, -1, 0}}); }
IntMatrix m_fab_y() { return IntMatrix::from_rows({{2, 1, 1}, {-1, -1, -1}, {-1, 0, -1}}); }

IntMatrix phi3_16() {
    return sparse16(with_shift({{{6, 1}}, {{6, 1}, {12, 1}}, {{6, 2}, {13, 1}}, {{6, 3}, {14, 1}}, {{6, 3}, {15, 1}},
                                {{6, 3}, {16, 1}}, {{2, 1}, {6, -1}}, {{5, 1}, {6, -2}}, {{4, 1}, {6, -3}},
                                {{3, 1}, {6, -3}}, {{1, 1}, {6, -3}}}));
}

IntMatrix psi_16() {
    return sparse16(with_shift({{{3, 2}, {6, 1}}, {{3, 2}, {6, 1}, {13, 1}}, {{3, 2}, {6, 1}, {12, 1}},
                                {{3, 2}, {6, 1}, {14, 1}}, {{3, 2}, {6, 1}, {15, 1}}, {{3, 2}, {6, 1}, {16, 1}},
                                {{3, -1}, {6, -1}}, {{3, -1}, {5, 1}, {6, -1}}, {{3, -2}, {4, 1}, {6, -1}},
                                {{2, 1}, {3, -3}, {6, -1}}, {{1, 1}, {3, -4}, {6, -1}}}));
}

IntMatrix bk_c1_16() {
    return sparse16(with_shift({{{6, 1}}, {{6, 1}, {12, 1}}, {{6, 2}, {13, 1}}, {{6, 3}, {14, 1}}, {{6, 3}, {15, 1}},
                                {{6, 3}, {16, 1}}, {{2, 1}, {6, -1}}, {{5, 1}, {6, -3}}, {{4, 1}, {6, -3}},
                                {{3, 1}, {6, -2}}, {{1, 1}, {6, -3}}}));
}

IntMatrix bk_matrix(int n) {
    if (n < 1) throw Error("BadArgument", "bk_matrix needs n >= 1");
    int N = n + 4;
    IntMatrix m(N);
    long long r0[4] = {2, 1, 1, 0}, r1[4] = {-1, -1, -1, 0}, r2[4] = {-1, 0, -1, 0}, r3[4] = {-1, -1, 0, 0};
    for (int j = 0; j < 4; ++j) {
        m(0, j) = r0[j];
        m(1, j) = r1[j];
        m(2, j) = r2[j];
        m(3, j) = r3[j];
    }
    // f^n(Q) -> H - E2 - Q
    m(0, N - 1) = 1;
    m(2, N - 1) = -1;
    m(3, N - 1) = -1;
    for (int i = 4; i < N; ++i) m(i, i - 1) = 1;
    return m;
}

IntPoly sixteen_charpoly() {
    return IntPoly{1, -3, 1} * IntPoly{1, -1, 1} * IntPoly{1, 1}.pow(2) * IntPoly{1, 1, 1}.pow(3) *
           IntPoly{-1, 1}.pow(4);
}

}  // namespace cat

IntPoly lehmer() { return IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

IntPoly chi_n(int n) {
    if (n < 0) throw Error("BadArgument", "chi_n needs n >= 0");
    return IntPoly::monomial(1, n + 1) * IntPoly{-1, -1, 0, 1} + IntPoly{-1, 0, 1, 1};
}

IntPoly chi_nk(int n, int k) {
    if (n < 2 || k < 2) throw Error("BadArgument", "chi_nk needs n, k >= 2");
    std::vector<Integer> c(n + 1, Integer(-k));
    c[0] = 1;
    c[n] = 1;
    return IntPoly(c);
}

IntPoly p_nm(int n, int m) {
    if (n < 3 || m < 1) throw Error("BadArgument", "p_nm needs n >= 3, m >= 1");
    IntPoly t = IntPoly::x();
    IntPoly num = t * (IntPoly::monomial(1, n * m) - IntPoly{1}) *
                  (IntPoly::monomial(1, n) - IntPoly::monomial(2, n - 1) + IntPoly{1});
    IntPoly den = (IntPoly::monomial(1, n) - IntPoly{1}) * (t - IntPoly{1});
    IntPoly q;
    if (!num.divide_exact(den, q)) throw Error("InexactDivision", "P_{n,m} quotient is not a polynomial");
    return q + IntPoly{1};
}

std::pair<Scalar, Scalar> phi_j(int j, const Scalar& t) {
    if (j < 1 || j > 3) throw Error("BadArgument", "phi_j needs j in {1,2,3}");
    Scalar one(1);
    if (t.is_zero() || t == one || t == -one || (t * t + t + one).is_zero())
        throw Error("PoleAtParameter", "t in the excluded set {-1, 1, 0, j, j^2}");
    Scalar t2 = t * t, t3 = t2 * t;
    if (j == 1) return {(t - t3 - t2 * t2) / (one + t * Scalar(2) + t2), (one - t3 * t2) / (t2 + t3)};
    if (j == 2) return {(t + t2 + t3) / (one + t * Scalar(2) + t2), (t3 - one) / (t + t2)};
    return {one + t, t - one / t};
}

HomPoly invariant_cubic(const Scalar& t, const Scalar& a, const Scalar& b) {
    Scalar one(1), tm = t - one, t3 = t * t * t, t4 = t3 * t;
    HomPoly x = X(), y = Y(), z = Z();
    HomPoly p = (x * x * x).scaled(a * tm * t4);
    p = p + (y * z * (z + y.scaled(t))).scaled(tm * t);
    p = p + x * ((y * z).scaled(Scalar(2) * b * t3) + (y * y).scaled(tm * t3) + (z * z).scaled(tm * (one + b * t)));
    p = p + (x * x * ((y + z.scaled(t)).scaled(a) + (y + z.scaled(t - Scalar(2) * b)).scaled(t))).scaled(tm * t3);
    return p;
}

namespace {

std::array<Scalar, 3> cross(const ProjPoint& u, const ProjPoint& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace

VnResidual vn_residual(const Scalar& a, const Scalar& b, int n) {
    if (n < 0) throw Error("BadArgument", "n must be nonnegative");
    VnResidual r{ProjPoint(Scalar(1), -a, Scalar(0)), ProjPoint(Scalar(1), -b, -a), {}, {}, false};
    RatMap f = cat::f_ab(a, b);
    ProjPoint q = r.q;
    r.orbit.push_back(q);
    for (int j = 0; j < n; ++j) {
        auto nq = f.apply(q);
        if (!nq) throw Error("OrbitHitsIndeterminacy", "f^" + std::to_string(j) + "(q) is an indeterminacy point");
        q = *nq;
        r.orbit.push_back(q);
    }
    r.cross = cross(q, r.p_star);
    r.on_vn = r.cross[0].is_zero() && r.cross[1].is_zero() && r.cross[2].is_zero();
    return r;
}

std::array<Scalar, 3> mcmullen_residual(const Scalar& a, const Scalar& b, int n) {
    if (n < 3) throw Error("BadArgument", "n must be at least 3");
    RatMap f = cat::mcmullen(a, b);
    ProjPoint p(a, b, Scalar(1));
    for (int i = 0; i < n - 3; ++i) {
        auto q = f.apply(p);
        if (!q) throw Error("OrbitHitsIndeterminacy", "orbit of p_4 meets an indeterminacy point");
        p = *q;
    }
    return cross(p, ProjPoint(Scalar(0), Scalar(0), Scalar(1)));
}

bool VerifyReport::all_pass() const {
    for (auto& i : items)
        if (!i.pass) return false;
    return !items.empty();
}

namespace {

using Checker = std::function<void(VerifyReport&)>;

void add(VerifyReport& r, const std::string& label, bool pass, const std::string& detail = "") {
    r.items.push_back({label, pass, detail});
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

const double kGolden2 = (3.0 + std::sqrt(5.0)) / 2.0;

void check_map_basics(VerifyReport& r, const RatMap& f, int deg, std::optional<Stratum> st, std::size_t n_ind) {
    add(r, "degree", f.degree() == deg, std::to_string(f.degree()));
    auto inv = inverse(f, deg);
    add(r, "inverse", inv && compose(*inv, f).is_identity() && compose(f, *inv).is_identity(),
        inv ? inv->str() : "not found");
    if (st) {
        auto q = quadratic_classify(f);
        add(r, "stratum", q.stratum == *st, stratum_name(q.stratum));
    }
    auto ind = indeterminacy_points(f);
    std::string pts;
    for (auto& p : ind.points) pts += p.str() + " ";
    add(r, "indeterminacy", ind.complete && ind.points.size() == n_ind, pts);
}

void check_matrix16(VerifyReport& r, const IntMatrix& m) {
    auto cp = char_poly(m);
    add(r, "charpoly", cp == cat::sixteen_charpoly(), cp.str("X"));
    auto s = salem_classify(cp);
    add(r, "dominant root", std::fabs(s.dominant_root - kGolden2) < 1e-12, fmt(s.dominant_root));
    Integer det = cp.coeff(0);
    add(r, "det", abs(det) == 1, det.get_str());
}

bool conj_identity(const RatMap& F, const Mat3& phi_a, const Mat3& phi_a0, const Mat3& M) {
    RatMap lhs = compose(RatMap::linear(phi_a), F);
    RatMap inner = compose(compose(RatMap::linear(phi_a0), F), RatMap::linear(M));
    RatMap rhs = compose(RatMap::linear(mat3_inverse(M)), inner);
    return lhs == rhs;
}

std::map<std::string, std::pair<std::string, Checker>>& registry() {
    static std::map<std::string, std::pair<std::string, Checker>> reg = {
        {"sigma",
         {"standard quadratic involution (yz : xz : xy)",
          [](VerifyReport& r) {
              auto s = cat::sigma();
              check_map_basics(r, s, 2, Stratum::Sigma3, 3);
              add(r, "involution", compose(s, s).is_identity());
              auto M = cat::m_sigma();
              add(r, "M_sigma^2 = Id", M * M == IntMatrix::identity(4));
              add(r, "M_sigma isometry", preserves_form(M));
          }}},
        {"rho",
         {"(xy : z^2 : yz)",
          [](VerifyReport& r) {
              auto f = cat::rho();
              check_map_basics(r, f, 2, Stratum::Sigma2, 2);
              add(r, "involution", compose(f, f).is_identity());
          }}},
        {"tau",
         {"(x^2 : xy : y^2 - xz)",
          [](VerifyReport& r) {
              auto f = cat::tau();
              check_map_basics(r, f, 2, Stratum::Sigma1, 1);
              add(r, "involution", compose(f, f).is_identity());
          }}},
        {"psi",
         {"(y^2 z : x(xz + y^2) : y(xz + y^2))",
          [](VerifyReport& r) {
              auto f = cat::psi();
              check_map_basics(r, f, 3, std::nullopt, 2);
              auto inv = inverse(f, 3);
              add(r, "inverse matches (y(z^2-xy) : z(z^2-xy) : xz^2)", inv && *inv == cat::psi_inverse_reference());
          }}},
        {"phi3",
         {"(xz^2 + y^3 : yz^2 : z^3), bounded degree",
          [](VerifyReport& r) {
              auto f = cat::phi_n(3);
              check_map_basics(r, f, 3, std::nullopt, 1);
              auto s = degree_sequence(f, 10);
              bool ok = true;
              for (long d : s.degrees) ok = ok && d == 3;
              add(r, "deg phi3^k = 3 for k <= 10", ok);
          }}},
        {"henon",
         {"projectivized (y, y^2 - x)",
          [](VerifyReport& r) {
              auto f = cat::henon();
              check_map_basics(r, f, 2, Stratum::Sigma1, 1);
              auto s = degree_sequence(f, 10);
              add(r, "lambda ~ 2", std::fabs(lambda_estimate(s) - 2.0) < 0.02, fmt(lambda_estimate(s)));
          }}},
        {"f-ab",
         {"(x(bx + y) : z(bx + y) : x(ax + z)) sampled at (a,b) = (1,2)",
          [](VerifyReport& r) {
              Scalar a(1), b(2);
              auto f = cat::f_ab(a, b);
              check_map_basics(r, f, 2, Stratum::Sigma3, 3);
              auto t = is_contracted_line(f, LinearForm::from_poly(X().scaled(a) + Z()));
              add(r, "ax + z contracted to (1 : -a : 0)", t && *t == ProjPoint(Scalar(1), -a, Scalar(0)),
                  t ? t->str() : "not contracted");
              auto ind = indeterminacy_points(f);
              bool has = false;
              for (auto& p : ind.points) has = has || p == ProjPoint(Scalar(1), -b, -a);
              add(r, "p_* = (1 : -b : -a) is indeterminate", has);
              auto mat = cat::m_fab_y();
              auto cp = char_poly(mat);
              add(r, "M_{f_{a,b,Y}} charpoly t^3 - t - 1", cp == IntPoly{-1, -1, 0, 1} || cp == IntPoly{1, 1, 0, -1},
                  cp.str());
              auto sc = salem_classify(cp);
              add(r, "Pisot 1.3247", sc.cls == SalemClass::Pisot && std::fabs(sc.dominant_root - 1.32471795724) < 1e-6,
                  fmt(sc.dominant_root));
          }}},
        {"f-alpha-beta",
         {"((alpha x + y) z : beta y (x + z) : z (x + z)) sampled at (2/3, 5/7)",
          [](VerifyReport& r) {
              auto f = cat::f_alpha_beta(Scalar(Rational(2, 3)), Scalar(Rational(5, 7)));
              check_map_basics(r, f, 2, std::nullopt, 3);
              auto g = growth_classify(degree_sequence(f, 12));
              add(r, "linear growth", g.label == Growth::Linear, growth_name(g.label));
          }}},
        {"mcmullen",
         {"((az + y) x : (bx + y) z : xz)",
          [](VerifyReport& r) {
              auto z0 = mcmullen_residual(Scalar(0), Scalar(0), 3);
              add(r, "n = 3 residual vanishes at (0,0)", z0[0].is_zero() && z0[1].is_zero() && z0[2].is_zero());
              auto z1 = mcmullen_residual(Scalar(1), Scalar(2), 3);
              add(r, "n = 3 residual nonzero at (1,2)", !(z1[0].is_zero() && z1[1].is_zero() && z1[2].is_zero()));
              check_map_basics(r, cat::mcmullen(Scalar(1), Scalar(2)), 2, Stratum::Sigma3, 3);
          }}},
        {"phi3-16x16",
         {"16x16 action matrix of phi_alpha Phi_3", [](VerifyReport& r) { check_matrix16(r, cat::phi3_16()); }}},
        {"psi-16x16", {"16x16 action matrix of phi_alpha psi", [](VerifyReport& r) { check_matrix16(r, cat::psi_16()); }}},
        {"bk-c1-16x16",
         {"16x16 action matrix of (xz^2 : z^3 : x^3 + z^3 - yz^2)",
          [](VerifyReport& r) {
              check_matrix16(r, cat::bk_c1_16());
              check_map_basics(r, cat::bk_c1(), 3, std::nullopt, 1);
          }}},
        {"bk-matrix",
         {"(n+4)x(n+4) action matrix of f_{a,b} for (a,b) in V_n, n = 7..10",
          [](VerifyReport& r) {
              for (int n = 7; n <= 10; ++n) {
                  auto m = cat::bk_matrix(n);
                  auto cp = char_poly(m);
                  double lm = spectral_radius(cp), lc = dominant_root_modulus(chi_n(n));
                  add(r, "n=" + std::to_string(n) + " dominant root vs chi_n", std::fabs(lm - lc) < 1e-9,
                      fmt(lm) + " vs " + fmt(lc));
                  add(r, "n=" + std::to_string(n) + " det", abs(cp.coeff(0)) == 1);
              }
          }}},
        {"iskovskikh-relation",
         {"(eta e)^3 = sigma with eta = (y : x : z), e = (xy : xz : yz)",
          [](VerifyReport& r) {
              auto g = compose(cat::eta(), cat::e_map());
              add(r, "(eta e)^3 = sigma", power(g, 3) == cat::sigma(), power(g, 3).str());
          }}},
        {"gizatullin-relation",
         {"(h sigma)^3 = id with h = (x : x - y : x - z)",
          [](VerifyReport& r) {
              auto g = compose(cat::h_gizatullin(), cat::sigma());
              add(r, "(h sigma)^3 = id", power(g, 3).is_identity(), power(g, 3).str());
          }}},
        {"conjugacy-phi3",
         {"phi_alpha Phi_3 = M^-1 (phi_alpha0 Phi_3) M, M = [[1,0,alpha0-alpha],[0,1,0],[0,0,1]]",
          [](VerifyReport& r) {
              for (auto [a, a0] : {std::pair<long, long>{1, 2}, {3, 5}, {-2, 7}}) {
                  Scalar al(a), al0(a0);
                  add(r, "(alpha, alpha0) = (" + std::to_string(a) + ", " + std::to_string(a0) + ")",
                      conj_identity(cat::phi_n(3), cat::phi3_alpha(al), cat::phi3_alpha(al0), cat::conj_phi3(al, al0)));
              }
          }}},
        {"conjugacy-psi",
         {"phi_alpha psi = M^-1 (phi_alpha0 psi) M, M = diag(1, alpha/alpha0, alpha^2/alpha0^2), over Q(sqrt -3)",
          [](VerifyReport& r) {
              for (auto [a, a0] : {std::pair<long, long>{1, 2}, {3, -4}}) {
                  Scalar al(a), al0(a0);
                  add(r, "(alpha, alpha0) = (" + std::to_string(a) + ", " + std::to_string(a0) + ")",
                      conj_identity(cat::psi(), cat::psi_alpha(al), cat::psi_alpha(al0), cat::conj_psi(al, al0)));
              }
          }}},
        {"cubic-table",
         {"sampled rows of the cubic table",
          [](VerifyReport& r) {
              for (auto& f : cat::cubic_table_rows()) {
                  auto inv = inverse(f, 3);
                  add(r, f.str(), inv && inv->degree() == 3 && compose(*inv, f).is_identity(),
                      inv ? inv->str() : "no inverse");
              }
          }}},
        {"invariant-cubic",
         {"P_{t,a,b} is invariant by f_{a,b} at (a,b) = phi_j(t)",
          [](VerifyReport& r) {
              Scalar t(2);
              for (int j = 1; j <= 3; ++j) {
                  auto [a, b] = phi_j(j, t);
                  auto P = invariant_cubic(t, a, b);
                  auto f = cat::f_ab(a, b);
                  auto comp = P.substitute(f.components());
                  add(r, "j=" + std::to_string(j) + " (a,b) = (" + a.str() + ", " + b.str() + ")",
                      divide_exact(comp, P).has_value());
              }
              Scalar a(Rational(3, 7)), b(Rational(-5, 2));
              auto P = invariant_cubic(t, a, b);
              add(r, "off-family (3/7, -5/2) not divisible",
                  !divide_exact(P.substitute(cat::f_ab(a, b).components()), P).has_value());
          }}},
        {"lehmer",
         {"Lehmer polynomial",
          [](VerifyReport& r) {
              auto s = salem_classify(lehmer());
              add(r, "Salem", s.cls == SalemClass::Salem, salem_name(s.cls));
              add(r, "root 1.17628081", std::fabs(s.dominant_root - 1.17628081826) < 1e-6, fmt(s.dominant_root));
              IntPoly q;
              add(r, "divides charpoly of standard element n=10", char_poly(standard_element(10)).divide_exact(lehmer(), q));
          }}},
        {"polynomial-families",
         {"chi_n, chi_{n,k}, P_{n,m}",
          [](VerifyReport& r) {
              add(r, "chi_7", chi_n(7) == IntPoly{-1, 0, 1, 1, 0, 0, 0, 0, -1, -1, 0, 1});
              add(r, "chi_{3,2}", chi_nk(3, 2) == IntPoly{1, -2, -2, 1});
              add(r, "chi_{3,2} root", std::fabs(dominant_root_modulus(chi_nk(3, 2)) - kGolden2) < 1e-6);
              for (auto [n, m] : {std::pair<int, int>{4, 1}, {3, 2}, {5, 2}}) {
                  auto s = salem_classify(p_nm(n, m));
                  add(r, "P_{" + std::to_string(n) + "," + std::to_string(m) + "} Salem", s.cls == SalemClass::Salem,
                      salem_name(s.cls) + " " + fmt(s.dominant_root));
              }
          }}},
    };
    return reg;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> v;
    for (auto& [k, e] : registry()) v.push_back(k);
    return v;
}

std::string catalog_description(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("UnknownEntry", "no catalog entry '" + name + "'");
    return it->second.first;
}

VerifyReport verify_entry(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("UnknownEntry", "no catalog entry '" + name + "'");
    VerifyReport r;
    r.name = name;
    try {
        it->second.second(r);
    } catch (const Error& e) {
        add(r, "exception", false, e.what());
    }
    return r;
}

}  // namespace cremona
