#include "cremona/ratmap.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "cremona/detail/expr.hpp"
#include "cremona/detail/linalg.hpp"

namespace cremona {

// 3x3 helpers

Mat3 mat3_identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = Scalar(i == j);
    return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Scalar s(0);
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            m[i][j] = s;
        }
    return m;
}

Scalar mat3_det(const Mat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 mat3_inverse(const Mat3& a) {
    Scalar det = mat3_det(a);
    if (det.is_zero()) throw Error("DivisionByZero", "singular matrix");
    Scalar inv = det.inverse();
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            m[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) * inv;
        }
    return m;
}

// ProjPoint

ProjPoint::ProjPoint(const Scalar& x, const Scalar& y, const Scalar& z) : c_{x, y, z} {
    int i = 0;
    while (i < 3 && c_[i].is_zero()) ++i;
    if (i == 3) throw Error("ZeroPoint", "projective point with all coordinates zero");
    Scalar inv = c_[i].inverse();
    for (auto& c : c_) c *= inv;
}

std::string ProjPoint::str() const { return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")"; }

ProjPoint ProjPoint::parse(const std::string& s) {
    std::string t = s;
    while (!t.empty() && (t.front() == '(' || t.front() == ' ')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ')' || t.back() == ' ')) t.pop_back();
    auto parts = detail::split_top(t, ':');
    if (parts.size() != 3) throw Error("ParseError", "point needs three coordinates: '" + s + "'");
    return ProjPoint(Scalar::parse(parts[0]), Scalar::parse(parts[1]), Scalar::parse(parts[2]));
}

// RatMap

RatMap::RatMap(std::array<HomPoly, 3> comps) : c_(std::move(comps)) {
    int deg = -1;
    for (auto& c : c_) {
        if (c.is_zero()) continue;
        if (deg >= 0 && c.degree() != deg) throw Error("DegreeMismatch", "components of unequal degree");
        deg = c.degree();
    }
    if (deg < 0) throw Error("ZeroMap", "all components vanish");
    for (auto& c : c_)
        if (c.is_zero()) c = HomPoly(deg);
    for (auto& c : c_) {
        if (c.is_zero()) continue;
        Scalar inv = c.lead().inverse();
        for (auto& d : c_) d = d.scaled(inv);
        break;
    }
    for (auto& c : c_)
        if (c.is_zero()) c = HomPoly(deg);
}

RatMap RatMap::identity() { return RatMap({HomPoly::var(0), HomPoly::var(1), HomPoly::var(2)}); }

RatMap RatMap::linear(const Mat3& m) {
    std::array<HomPoly, 3> c;
    for (int i = 0; i < 3; ++i) {
        c[i] = HomPoly(1);
        for (int j = 0; j < 3; ++j) c[i] += HomPoly::var(j).scaled(m[i][j]);
    }
    return RatMap(c);
}

long long RatMap::field() const {
    long long d = 0;
    for (auto& c : c_) d = merge_field(d, c.field());
    return d;
}

std::size_t RatMap::digits() const { return c_[0].digits() + c_[1].digits() + c_[2].digits(); }

bool RatMap::is_identity() const {
    return degree() == 1 && c_[0] == HomPoly::var(0) && c_[1] == HomPoly::var(1) && c_[2] == HomPoly::var(2);
}

std::optional<ProjPoint> RatMap::apply(const ProjPoint& p) const {
    std::array<Scalar, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = c_[i].eval(p.coords());
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) return std::nullopt;
    return ProjPoint(v);
}

std::string RatMap::str() const { return c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str(); }

std::array<HomPoly, 3> RatMap::parse_raw(const std::string& s) {
    auto parts = detail::split_top(s, ':');
    if (parts.size() != 3) throw Error("ParseError", "map needs three components separated by ':'");
    std::array<HomPoly, 3> c;
    int deg = -1;
    for (int i = 0; i < 3; ++i) {
        c[i] = HomPoly::parse(parts[i]);
        if (c[i].is_zero()) continue;
        if (deg >= 0 && c[i].degree() != deg) throw Error("DegreeMismatch", "components of unequal degree");
        deg = c[i].degree();
    }
    if (deg < 0) throw Error("ZeroMap", "all components vanish");
    for (auto& p : c)
        if (p.is_zero()) p = HomPoly(deg);
    return c;
}

RatMap RatMap::parse(const std::string& s) { return normalize(parse_raw(s)); }

RatMap normalize(const std::array<HomPoly, 3>& raw) {
    int deg = -1;
    for (auto& c : raw) {
        if (c.is_zero()) continue;
        if (deg >= 0 && c.degree() != deg) throw Error("DegreeMismatch", "components of unequal degree");
        deg = c.degree();
    }
    if (deg < 0) throw Error("ZeroMap", "all components vanish");
    GcdResult g = gcd_cofactors({raw[0], raw[1], raw[2]});
    int nd = deg - g.g.degree();
    if (nd <= 0) throw Error("ZeroMap", "map is constant after removing the common factor");
    std::array<HomPoly, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = raw[i].is_zero() ? HomPoly(nd) : std::move(g.cofactors[i]);
    return RatMap(std::move(c));
}

std::array<HomPoly, 3> compose_raw(const RatMap& f, const RatMap& g) {
    return {f[0].substitute(g.components()), f[1].substitute(g.components()), f[2].substitute(g.components())};
}

RatMap compose(const RatMap& f, const RatMap& g) {
    if (g.is_identity()) return f;
    if (f.is_identity()) return g;
    return normalize(compose_raw(f, g));
}

RatMap power(const RatMap& f, int k) {
    if (k < 0) throw Error("BadArgument", "negative power");
    RatMap r = RatMap::identity();
    for (int i = 0; i < k; ++i) r = compose(f, r);
    return r;
}

// inverse by linear ansatz

std::optional<RatMap> inverse(const RatMap& f, int D) {
    if (D < 1) throw Error("BadArgument", "target degree must be positive");
    std::vector<std::array<unsigned, 3>> mons;
    for (int i = D; i >= 0; --i)
        for (int j = D - i; j >= 0; --j) mons.push_back({unsigned(i), unsigned(j), unsigned(D - i - j)});
    std::size_t N = mons.size();
    std::vector<HomPoly> img;
    for (auto& m : mons) img.push_back(HomPoly::monomial(Scalar(1), m[0], m[1], m[2]).substitute(f.components()));
    const Key unit[3] = {pack(1, 0, 0), pack(0, 1, 0), pack(0, 0, 1)};
    detail::SMatrix rows;
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto& pr : pairs) {
        int a = pr[0], b = pr[1];
        std::map<Key, std::vector<Scalar>> eq;
        for (std::size_t m = 0; m < N; ++m)
            for (auto& [k, c] : img[m].terms()) {
                auto& r1 = eq[k + unit[b]];
                if (r1.empty()) r1.assign(3 * N, Scalar(0));
                r1[a * N + m] += c;
                auto& r2 = eq[k + unit[a]];
                if (r2.empty()) r2.assign(3 * N, Scalar(0));
                r2[b * N + m] -= c;
            }
        for (auto& kv : eq) rows.push_back(std::move(kv.second));
    }
    auto basis = detail::nullspace(std::move(rows), 3 * N);
    if (basis.empty()) return std::nullopt;
    std::vector<std::vector<Scalar>> tries(basis.begin(), basis.begin() + std::min<std::size_t>(basis.size(), 3));
    if (basis.size() > 1) {
        std::vector<Scalar> mix(3 * N, Scalar(0));
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t i = 0; i < 3 * N; ++i) mix[i] += basis[b][i] * Scalar(long(b * 7 % 11 + 1));
        tries.push_back(mix);
    }
    for (auto& v : tries) {
        std::array<HomPoly, 3> g;
        for (int i = 0; i < 3; ++i) {
            std::vector<Term> t;
            for (std::size_t m = 0; m < N; ++m)
                if (!v[i * N + m].is_zero()) t.push_back({pack(mons[m][0], mons[m][1], mons[m][2]), v[i * N + m]});
            g[i] = HomPoly::from_terms(D, std::move(t));
        }
        try {
            RatMap gm = normalize(g);
            if (compose(gm, f).is_identity() && compose(f, gm).is_identity()) return gm;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

std::optional<ProjPoint> is_contracted_line(const RatMap& f, const LinearForm& L) {
    auto par = parametrize_line(L);
    std::vector<HomPoly> h = {f[0].substitute(par), f[1].substitute(par), f[2].substitute(par)};
    if (h[0].is_zero() && h[1].is_zero() && h[2].is_zero())
        throw Error("LineInIndeterminacy", "map vanishes on the line " + L.str());
    GcdResult g = gcd_cofactors(h);
    for (auto& c : g.cofactors)
        if (!c.is_zero() && c.degree() > 0) return std::nullopt;
    std::array<Scalar, 3> p;
    for (int i = 0; i < 3; ++i) p[i] = g.cofactors[i].is_zero() ? Scalar(0) : g.cofactors[i].lead();
    return ProjPoint(p);
}

// common zeros

namespace {

UPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
    std::size_t n = xs.size();
    std::vector<Scalar> c = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly r(c[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) r = r * UPoly({-xs[k], Scalar(1)}) + UPoly(c[k]);
    return r;
}

// coefficients of G(t, y, 1) in y
std::vector<Scalar> in_y(const HomPoly& G, const Scalar& t) {
    std::vector<Scalar> c(G.degree() + 1, Scalar(0));
    for (auto& [k, v] : G.terms()) c[ey(k)] += v * t.pow(ex(k));
    return c;
}

Scalar sylvester(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::size_t m = a.size() - 1, n = b.size() - 1, s = m + n;
    detail::SMatrix S(s, std::vector<Scalar>(s, Scalar(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) S[r][r + i] = a[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) S[n + r][r + i] = b[n - i];
    return detail::determinant(std::move(S));
}

// Res_y(G1, G2)(t, 1)
UPoly resultant_y(const HomPoly& G1, const HomPoly& G2) {
    int n = G1.degree() * G2.degree();
    std::vector<Scalar> xs, ys;
    for (int t = 0; t <= n; ++t) {
        xs.push_back(Scalar(t));
        ys.push_back(sylvester(in_y(G1, Scalar(t)), in_y(G2, Scalar(t))));
    }
    return interpolate(xs, ys);
}

UPoly restrict_y(const HomPoly& F, const Scalar& x, const Scalar& z) {
    std::vector<Scalar> c(F.degree() + 1, Scalar(0));
    for (auto& [k, v] : F.terms()) c[ey(k)] += v * x.pow(ex(k)) * z.pow(ez(k));
    return UPoly(c);
}

// gcd of restrictions; nullopt when all vanish
std::optional<UPoly> y_gcd(const std::vector<HomPoly>& F, const Scalar& x, const Scalar& z) {
    UPoly g;
    for (auto& f : F) g = gcd(g, restrict_y(f, x, z));
    if (g.is_zero()) return std::nullopt;
    return g;
}

}  // namespace

PointSet common_zeros(const std::vector<HomPoly>& Fin, long long d) {
    std::vector<HomPoly> F;
    for (auto& f : Fin) {
        if (f.is_zero()) continue;
        if (f.degree() == 0) return {};
        d = merge_field(d, f.field());
        F.push_back(f);
    }
    if (F.empty()) throw Error("ZeroMap", "no equations");
    std::mt19937_64 rng(12345);
    auto small = [&](int r) { return long(rng() % (2 * r + 1)) - r; };
    for (int attempt = 0; attempt < 40; ++attempt) {
        Mat3 T;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) T[i][j] = Scalar(attempt == 0 ? long(i == j) : small(3));
        if (mat3_det(T).is_zero()) continue;
        std::array<HomPoly, 3> lin;
        for (int i = 0; i < 3; ++i) {
            lin[i] = HomPoly(1);
            for (int j = 0; j < 3; ++j) lin[i] += HomPoly::var(j).scaled(T[i][j]);
        }
        std::vector<HomPoly> FT;
        for (auto& f : F) FT.push_back(f.substitute(lin));
        bool same = true;
        for (auto& f : FT) same = same && f.degree() == FT[0].degree();
        std::vector<HomPoly> G;
        if (same) {
            for (int k = 0; k < 3; ++k) {
                HomPoly g(FT[0].degree());
                for (auto& f : FT) g += f.scaled(Scalar(small(5) + (k == 0 ? 11 : 0)));
                G.push_back(g);
            }
        } else {
            G = {FT[0], FT.size() > 1 ? FT[1] : FT[0], FT.size() > 2 ? FT[2] : FT.back()};
        }
        bool ok = true;
        for (auto& g : G) ok = ok && !g.is_zero() && !g.coeff(0, g.degree(), 0).is_zero();
        if (!ok) continue;
        UPoly R1 = resultant_y(G[0], G[1]), R2 = resultant_y(G[0], G[2]);
        if (R1.is_zero() || R2.is_zero()) continue;
        UPoly h = gcd(R1, R2);
        PointSet out;
        std::vector<std::array<Scalar, 3>> pts;
        auto take = [&](const Scalar& x0, const Scalar& z0) {
            auto g = y_gcd(FT, x0, z0);
            if (!g) {
                out.complete = false;
                return;
            }
            if (g->degree() < 1) return;
            FieldRoots yr = roots_in_field(*g, d);
            if (!yr.complete) out.complete = false;
            for (auto& y0 : yr.roots) pts.push_back({x0, y0, z0});
        };
        if (h.degree() >= 1) {
            FieldRoots xr = roots_in_field(h, d);
            if (!xr.complete) out.complete = false;
            for (auto& x0 : xr.roots) take(x0, Scalar(1));
        }
        take(Scalar(1), Scalar(0));
        for (auto& p : pts) {
            std::array<Scalar, 3> q;
            for (int i = 0; i < 3; ++i) q[i] = T[i][0] * p[0] + T[i][1] * p[1] + T[i][2] * p[2];
            ProjPoint pp(q);
            bool zero = true;
            for (auto& f : F) zero = zero && f.eval(pp.coords()).is_zero();
            if (zero && std::find(out.points.begin(), out.points.end(), pp) == out.points.end()) out.points.push_back(pp);
        }
        std::sort(out.points.begin(), out.points.end());
        return out;
    }
    throw Error("ResourceLimit", "no generic chart for common zeros");
}

PointSet indeterminacy_points(const RatMap& f, long long d) {
    return common_zeros({f[0], f[1], f[2]}, merge_field(f.field(), d));
}

// quadratic classification

std::string stratum_name(Stratum s) {
    switch (s) {
        case Stratum::Sigma0: return "Sigma0";
        case Stratum::Sigma1: return "Sigma1";
        case Stratum::Sigma2: return "Sigma2";
        case Stratum::Sigma3: return "Sigma3";
        case Stratum::NotBirational: return "NotBirational";
        case Stratum::NotQuadratic: return "NotQuadratic";
        case Stratum::FieldObstruction: return "FieldObstruction";
    }
    return "?";
}

QuadClass quadratic_classify(const RatMap& f, long long dw) {
    QuadClass q;
    if (f.degree() != 2) {
        q.stratum = Stratum::NotQuadratic;
        return q;
    }
    HomPoly J = jacobian_det(f.components());
    if (J.is_zero()) {
        q.stratum = Stratum::NotBirational;
        q.note = "jacobian determinant vanishes identically";
        return q;
    }
    long long d = merge_field(f.field(), dw);
    LinearSplit split = linear_factors(J, d);
    q.det_jac_lines = split.factors;
    try {
        q.ind_points = indeterminacy_points(f, d);
    } catch (const Error& e) {
        q.ind_points.complete = false;
    }
    if (split.residual.degree() > 0) {
        q.stratum = Stratum::FieldObstruction;
        q.note = "NotFullySplit: jacobian determinant has no splitting over the working field";
        return q;
    }
    bool all = true;
    for (auto& lf : q.det_jac_lines) {
        q.contraction_targets.push_back(is_contracted_line(f, lf.line));
        all = all && q.contraction_targets.back().has_value();
    }
    std::vector<int> ms;
    for (auto& lf : q.det_jac_lines) ms.push_back(lf.mult);
    std::sort(ms.rbegin(), ms.rend());
    q.stratum = Stratum::NotBirational;
    if (!all) {
        q.note = "a jacobian line is not contracted";
    } else if (ms == std::vector<int>{1, 1, 1}) {
        Mat3 m;
        for (int i = 0; i < 3; ++i) m[i] = q.det_jac_lines[i].line.coeffs();
        if (mat3_det(m).is_zero()) q.note = "the three lines are concurrent";
        else q.stratum = Stratum::Sigma3;
    } else if (ms == std::vector<int>{2, 1}) {
        q.stratum = Stratum::Sigma2;
    } else if (ms == std::vector<int>{3}) {
        q.stratum = Stratum::Sigma1;
    }
    if (q.stratum != Stratum::NotBirational && !inverse(f, 2)) {
        q.stratum = Stratum::NotBirational;
        q.note = "no quadratic inverse";
    }
    return q;
}

QuadClass quadratic_classify(const std::array<HomPoly, 3>& raw, long long dw) {
    int deg = -1;
    for (auto& c : raw)
        if (!c.is_zero()) deg = c.degree();
    QuadClass q;
    if (deg != 2) {
        if (deg > 0) {
            RatMap f = normalize(raw);
            if (f.degree() == 2) return quadratic_classify(f, dw);
        }
        q.stratum = Stratum::NotQuadratic;
        return q;
    }
    GcdResult g = gcd_cofactors({raw[0], raw[1], raw[2]});
    if (g.g.degree() == 0) return quadratic_classify(RatMap(raw), dw);
    if (g.g.degree() == 1) {
        Mat3 m;
        for (int i = 0; i < 3; ++i) {
            const HomPoly& c = g.cofactors[i];
            for (int j = 0; j < 3; ++j) m[i][j] = c.is_zero() ? Scalar(0) : c.coeff(j == 0, j == 1, j == 2);
        }
        if (!mat3_det(m).is_zero()) {
            q.stratum = Stratum::Sigma0;
            q.det_jac_lines.push_back({LinearForm::from_poly(g.g), 1});
            q.note = "apparent linear factor times a linear automorphism";
            return q;
        }
    }
    q.stratum = Stratum::NotBirational;
    q.note = "degenerate after removing the common factor";
    return q;
}

// Noether relations

bool MultiplicityProfile::consistent() const {
    long s = 0, s2 = 0;
    for (int x : m) {
        s += x;
        s2 += long(x) * x;
    }
    return s == 3L * (degree - 1) && s2 == long(degree) * degree - 1;
}

namespace {

void noether_dfs(int maxm, long S, long Q, std::vector<int>& cur, int nu, std::vector<MultiplicityProfile>& out) {
    if (S == 0 && Q == 0) {
        out.push_back({nu, cur});
        return;
    }
    if (S <= 0 || Q <= 0) return;
    for (int m = std::min<long>(maxm, S); m >= 1; --m) {
        long q2 = long(m) * m;
        if (q2 > Q) continue;
        // remaining parts are <= m
        if (Q > S * m) break;
        if (Q < S) break;
        cur.push_back(m);
        noether_dfs(m, S - m, Q - q2, cur, nu, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiplicityProfile> noether_solve(int nu, std::optional<int> largest) {
    if (nu < 2) throw Error("BadArgument", "degree must be at least 2");
    if (nu > 40) throw Error("ResourceLimit", "degree too large for the search");
    std::vector<MultiplicityProfile> out;
    std::vector<int> cur;
    long S = 3L * (nu - 1), Q = long(nu) * nu - 1;
    if (largest) {
        int m = *largest;
        if (m < 1 || m > nu - 1) return out;
        cur.push_back(m);
        noether_dfs(m, S - m, Q - long(m) * m, cur, nu, out);
    } else {
        noether_dfs(nu - 1, S, Q, cur, nu, out);
    }
    return out;
}

// de Jonquieres

namespace {

RatFunc mobius(const std::array<Scalar, 4>& b) {
    return RatFunc(UPoly({b[1], b[0]}), UPoly({b[3], b[2]}));
}

UPoly exact_quot(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    a.divrem(b, q, r);
    return q;
}

HomPoly binary_form(const UPoly& p, int k) {
    std::vector<Term> t;
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) t.push_back({pack(0, unsigned(i), unsigned(k - i)), p.coeff(i)});
    return HomPoly::from_terms(k, std::move(t));
}

UPoly dehom_yz(const HomPoly& p) {
    std::vector<Scalar> c(std::max(p.degree(), 0) + 1, Scalar(0));
    for (auto& [k, v] : p.terms()) {
        if (ex(k) != 0) throw Error("BadArgument", "binary form must not involve x");
        c[ey(k)] = v;
    }
    return UPoly(c);
}

}  // namespace

JonqElement JonqElement::identity() {
    return {{RatFunc(Scalar(1)), RatFunc(Scalar(0)), RatFunc(Scalar(0)), RatFunc(Scalar(1))},
            {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}};
}

RatMap jonq_to_ratmap(const JonqElement& j) {
    UPoly L(Scalar(1));
    for (auto& e : j.vertical) L = exact_quot(L * e.den(), gcd(L, e.den()));
    std::array<UPoly, 4> P;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        P[i] = j.vertical[i].num() * exact_quot(L, j.vertical[i].den());
        k = std::max(k, P[i].degree());
    }
    HomPoly X = HomPoly::var(0), Y = HomPoly::var(1), Z = HomPoly::var(2);
    HomPoly Nx = binary_form(P[0], k) * X + binary_form(P[1], k) * Z;
    HomPoly Dx = binary_form(P[2], k) * X + binary_form(P[3], k) * Z;
    HomPoly Ny = Y.scaled(j.base[0]) + Z.scaled(j.base[1]);
    HomPoly Dy = Y.scaled(j.base[2]) + Z.scaled(j.base[3]);
    return normalize({Nx * Dy, Ny * Dx, Dx * Dy});
}

JonqElement jonq_compose(const JonqElement& j1, const JonqElement& j2) {
    RatFunc B2 = mobius(j2.base);
    std::array<RatFunc, 4> m1;
    for (int i = 0; i < 4; ++i) m1[i] = j1.vertical[i].compose(B2);
    const auto& m2 = j2.vertical;
    JonqElement r;
    r.vertical = {m1[0] * m2[0] + m1[1] * m2[2], m1[0] * m2[1] + m1[1] * m2[3], m1[2] * m2[0] + m1[3] * m2[2],
                  m1[2] * m2[1] + m1[3] * m2[3]};
    const auto& a = j1.base;
    const auto& b = j2.base;
    r.base = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    return r;
}

JonqElement jonq_inverse(const JonqElement& j) {
    std::array<Scalar, 4> adjb = {j.base[3], -j.base[1], -j.base[2], j.base[0]};
    RatFunc Binv = mobius(adjb);
    const auto& m = j.vertical;
    JonqElement r;
    r.vertical = {m[3].compose(Binv), (-m[1]).compose(Binv), (-m[2]).compose(Binv), m[0].compose(Binv)};
    r.base = adjb;
    return r;
}

bool jonq_is_identity(const JonqElement& j) {
    const auto& m = j.vertical;
    const auto& b = j.base;
    return m[1].is_zero() && m[2].is_zero() && !m[0].is_zero() && m[0] == m[3] && b[1].is_zero() && b[2].is_zero() &&
           !b[0].is_zero() && b[0] == b[3];
}

JonqElement jonq_builder(const HomPoly& phi1, const HomPoly& phi0, const HomPoly& psi2, const HomPoly& psi1,
                         const std::array<Scalar, 4>& base) {
    UPoly cyd({base[3], base[2]});
    JonqElement j;
    j.vertical = {RatFunc(dehom_yz(phi1), UPoly(Scalar(1))), RatFunc(dehom_yz(phi0), UPoly(Scalar(1))),
                  RatFunc(dehom_yz(psi2) * cyd, UPoly(Scalar(1))), RatFunc(dehom_yz(psi1) * cyd, UPoly(Scalar(1)))};
    j.base = base;
    return j;
}

std::array<HomPoly, 3> jonq_display(const HomPoly& phi1, const HomPoly& phi0, const HomPoly& psi2, const HomPoly& psi1,
                                    const std::array<Scalar, 4>& base) {
    HomPoly X = HomPoly::var(0), Y = HomPoly::var(1), Z = HomPoly::var(2);
    HomPoly top = X * phi1 + phi0;
    HomPoly w = X * psi2 + psi1;
    return {top, w * (Y.scaled(base[0]) + Z.scaled(base[1])), w * (Y.scaled(base[2]) + Z.scaled(base[3]))};
}

}  // namespace cremona
