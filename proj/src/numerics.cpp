#include "cremona/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cctype>
#include <cmath>

namespace cremona {

static ComplexL horner(const std::vector<ComplexL>& c, ComplexL x, ComplexL& deriv) {
    ComplexL p = 0;
    deriv = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        deriv = deriv * x + p;
        p = p * x + c[i];
    }
    return p;
}

std::vector<ComplexL> poly_roots_ld(const std::vector<ComplexL>& coeffs) {
    std::vector<ComplexL> c = coeffs;
    while (!c.empty() && c.back() == ComplexL(0)) c.pop_back();
    if (c.size() <= 1) {
        if (c.empty()) throw Error("IllConditioned", "zero polynomial has no root set");
        return {};
    }
    std::vector<ComplexL> roots;
    std::size_t low = 0;
    while (c[low] == ComplexL(0)) {
        roots.push_back(0);
        ++low;
    }
    std::vector<ComplexL> d(c.begin() + low, c.end());
    int n = (int)d.size() - 1;
    if (n == 0) return roots;
    std::vector<ComplexL> found;
    if (n == 1) {
        found.push_back(-d[0] / d[1]);
    } else {
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < n; ++i) {
            ComplexL v = -d[i] / d[n];
            comp(i, n - 1) = std::complex<double>((double)v.real(), (double)v.imag());
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
        for (int i = 0; i < n; ++i) {
            auto e = es.eigenvalues()(i);
            found.emplace_back(e.real(), e.imag());
        }
    }
    for (auto& r : found) {
        ComplexL dp;
        ComplexL p = horner(d, r, dp);
        for (int it = 0; it < 60; ++it) {
            if (dp == ComplexL(0)) break;
            ComplexL nr = r - p / dp;
            ComplexL ndp;
            ComplexL np = horner(d, nr, ndp);
            if (std::abs(np) >= std::abs(p)) break;
            r = nr;
            p = np;
            dp = ndp;
        }
        roots.push_back(r);
    }
    return roots;
}

static RootSet finish(const std::vector<ComplexL>& c, const std::vector<ComplexL>& roots) {
    RootSet rs;
    long double scale = 0;
    for (auto& v : c) scale = std::max(scale, std::abs(v));
    int n = (int)c.size() - 1;
    while (n > 0 && c[n] == ComplexL(0)) --n;
    for (auto& r : roots) {
        ComplexL dp;
        long double res = std::abs(horner(c, r, dp));
        long double mag = std::pow(std::max((long double)1, std::abs(r)), (long double)n);
        rs.residual_bound = std::max(rs.residual_bound, (double)(res / (scale * mag)));
        rs.roots.emplace_back((double)r.real(), (double)r.imag());
    }
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        int m = 0;
        for (std::size_t j = 0; j < rs.roots.size(); ++j)
            if (std::abs(rs.roots[i] - rs.roots[j]) <= 1e-5 * std::max(1.0, std::abs(rs.roots[i]))) ++m;
        rs.multiplicity.push_back(m);
    }
    if (rs.residual_bound > 1e-8) throw Error("IllConditioned", "root refinement did not converge");
    return rs;
}

RootSet poly_roots(const std::vector<ComplexL>& c) { return finish(c, poly_roots_ld(c)); }

RootSet poly_roots(const std::vector<double>& c) {
    std::vector<ComplexL> cc(c.begin(), c.end());
    return poly_roots(cc);
}

RootSet poly_roots(const IntPoly& p) {
    if (p.degree() < 1) throw Error("IllConditioned", "degree must be at least 1");
    std::vector<ComplexL> c;
    for (auto& v : p.coeffs()) c.emplace_back((long double)v.get_d());
    return poly_roots(c);
}

double dominant_root_modulus(const IntPoly& p) {
    double best = 0;
    for (auto& r : poly_roots(p).roots) best = std::max(best, std::abs(r));
    return best;
}

Family parse_family(const std::string& s) {
    if (s == "fab" || s == "f_alpha_beta" || s == "falphabeta") return Family::FAlphaBeta;
    if (s == "bk" || s == "bk_fab" || s == "bedford-kim") return Family::BkFab;
    if (s == "mcmullen") return Family::McMullen;
    throw Error("UsageError", "unknown family '" + s + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::FAlphaBeta: return "fab";
        case Family::BkFab: return "bk_fab";
        case Family::McMullen: return "mcmullen";
    }
    return "?";
}

Projection parse_projection(const std::string& s) {
    if (s == "omega1") return Projection::Omega1;
    if (s == "omega2") return Projection::Omega2;
    throw Error("UsageError", "unknown projection '" + s + "'");
}

static const double kPoleEps = 1e-12;
static const double kEscape = 1e12;

bool family_step(Family fam, ComplexF p1, ComplexF p2, const CPoint& in, CPoint& out) {
    ComplexF x = in[0], y = in[1];
    switch (fam) {
        case Family::FAlphaBeta: {
            ComplexF den = x + 1.0;
            if (std::abs(den) < kPoleEps) return false;
            out = {(p1 * x + y) / den, p2 * y};
            return true;
        }
        case Family::BkFab: {
            // chart x = 1 of (x(bx+y) : z(bx+y) : x(ax+z)), coordinates (y, z)
            ComplexF den = p2 + x;
            if (std::abs(den) < kPoleEps) return false;
            out = {y, (p1 + y) / den};
            return true;
        }
        case Family::McMullen: {
            if (std::abs(x) < kPoleEps) return false;
            out = {p1 + y, p2 + y / x};
            return true;
        }
    }
    return false;
}

Orbit iterate_family(Family fam, ComplexF p1, ComplexF p2, CPoint seed, std::size_t n) {
    if (n > 1000000) throw Error("UsageError", "orbit length capped at 10^6");
    Orbit o{fam, p1, p2, seed, {}, false};
    CPoint probe;
    if (!family_step(fam, p1, p2, seed, probe)) throw Error("PoleAtSeed", "seed sits on a pole");
    o.points.reserve(n);
    CPoint cur = seed;
    for (std::size_t k = 0; k < n; ++k) {
        CPoint nxt;
        if (!family_step(fam, p1, p2, cur, nxt)) {
            o.diverged = true;
            break;
        }
        bool bad = false;
        for (auto& c : nxt)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || std::abs(c) > kEscape) bad = true;
        if (bad) {
            o.diverged = true;
            break;
        }
        o.points.push_back(nxt);
        cur = nxt;
    }
    return o;
}

OrbitCloud project_cloud(const Orbit& orbit, Projection proj) {
    OrbitCloud cl{proj, {}, orbit.diverged};
    cl.points.reserve(orbit.points.size());
    for (std::size_t k = 0; k < orbit.points.size(); ++k) {
        const auto& p = orbit.points[k];
        if (proj == Projection::Omega1)
            cl.points.push_back({k + 1, {p[0].real(), p[0].imag(), p[1].imag()}});
        else
            cl.points.push_back({k + 1, {p[0].real(), p[1].real(), p[1].imag()}});
    }
    return cl;
}

static void normalize3(std::array<ComplexF, 3>& v) {
    double m = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
    if (m == 0) return;
    for (auto& c : v) c /= m;
}

std::vector<std::array<ComplexF, 3>> bk_orbit_numeric(ComplexF a, ComplexF b, int n) {
    std::vector<std::array<ComplexF, 3>> out;
    std::array<ComplexF, 3> q{1.0, -a, 0.0};
    normalize3(q);
    out.push_back(q);
    for (int j = 0; j < n; ++j) {
        auto [x, y, z] = q;
        std::array<ComplexF, 3> nq{x * (b * x + y), z * (b * x + y), x * (a * x + z)};
        double m = std::max({std::abs(nq[0]), std::abs(nq[1]), std::abs(nq[2])});
        if (m < 1e-14 || !std::isfinite(m)) throw Error("OrbitHitsIndeterminacy", "orbit of q meets Ind f at step " + std::to_string(j));
        normalize3(nq);
        q = nq;
        out.push_back(q);
    }
    return out;
}

std::array<ComplexF, 2> vn_residual_numeric(ComplexF a, ComplexF b, int n) {
    auto orb = bk_orbit_numeric(a, b, n);
    auto& u = orb.back();
    if (std::abs(u[0]) < 1e-300) return {ComplexF(1e300), ComplexF(1e300)};
    return {u[1] / u[0] + b, u[2] / u[0] + a};
}

static double norm2(const std::array<ComplexF, 2>& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

VnSolution newton_solve_vn(int n, ComplexF a, ComplexF b, int max_steps) {
    const double h = 1e-7;
    auto F = [&](ComplexF aa, ComplexF bb) {
        try {
            return vn_residual_numeric(aa, bb, n);
        } catch (const Error&) {
            return std::array<ComplexF, 2>{ComplexF(1e300), ComplexF(1e300)};
        }
    };
    auto r = F(a, b);
    for (int step = 0; step < max_steps; ++step) {
        double rn = norm2(r);
        if (rn < 1e-10) return {a, b, rn, step};
        if (!std::isfinite(rn) || rn > 1e200) break;
        auto fa1 = F(a + h, b), fa0 = F(a - h, b), fb1 = F(a, b + h), fb0 = F(a, b - h);
        ComplexF j00 = (fa1[0] - fa0[0]) / (2 * h), j10 = (fa1[1] - fa0[1]) / (2 * h);
        ComplexF j01 = (fb1[0] - fb0[0]) / (2 * h), j11 = (fb1[1] - fb0[1]) / (2 * h);
        ComplexF det = j00 * j11 - j01 * j10;
        if (std::abs(det) < 1e-300 || !std::isfinite(std::abs(det))) break;
        ComplexF da = -(j11 * r[0] - j01 * r[1]) / det;
        ComplexF db = -(-j10 * r[0] + j00 * r[1]) / det;
        double lam = 1.0;
        bool moved = false;
        while (lam > 1e-8) {
            auto nr = F(a + lam * da, b + lam * db);
            if (norm2(nr) < rn) {
                a += lam * da;
                b += lam * db;
                r = nr;
                moved = true;
                break;
            }
            lam *= 0.5;
        }
        if (!moved) break;
    }
    double rn = norm2(r);
    if (rn < 1e-10) return {a, b, rn, max_steps};
    throw Error("NonConvergence", "Newton on V_" + std::to_string(n) + " stalled at residual " + std::to_string(rn));
}

std::vector<ComplexF> mobius_orbit(ComplexF c, ComplexF w0, int n) {
    std::vector<ComplexF> out{w0};
    ComplexF w = w0;
    for (int k = 0; k < n; ++k) {
        w = c - 1.0 / w;
        out.push_back(w);
    }
    return out;
}

// complex expression parser
namespace {
struct CParser {
    const std::string& s;
    std::size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& m) { throw Error("ParseError", m + " in '" + s + "'"); }
    ComplexF expr() {
        ComplexF v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    ComplexF term() {
        ComplexF v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) v /= unary();
            else return v;
        }
    }
    ComplexF unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    ComplexF power() {
        ComplexF b = atom();
        if (eat('^')) return std::pow(b, unary());
        return b;
    }
    ComplexF atom() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        if (eat('(')) {
            ComplexF v = expr();
            if (!eat(')')) fail("missing )");
            return v;
        }
        if (std::isdigit((unsigned char)s[i]) || s[i] == '.') {
            std::size_t used = 0;
            double v = std::stod(s.substr(i), &used);
            i += used;
            if (i < s.size() && s[i] == 'i') {
                ++i;
                return {0, v};
            }
            return {v, 0};
        }
        std::size_t j = i;
        while (j < s.size() && std::isalpha((unsigned char)s[j])) ++j;
        std::string name = s.substr(i, j - i);
        i = j;
        if (name == "i") return {0, 1};
        if (name == "pi") return {M_PI, 0};
        if (name == "e") return {M_E, 0};
        if (!eat('(')) fail("unknown name " + name);
        ComplexF a = expr();
        if (!eat(')')) fail("missing )");
        if (name == "exp") return std::exp(a);
        if (name == "sqrt") return std::sqrt(a);
        if (name == "cos") return std::cos(a);
        if (name == "sin") return std::sin(a);
        if (name == "log") return std::log(a);
        fail("unknown function " + name);
    }
};
}  // namespace

ComplexF parse_complex(const std::string& s) {
    CParser p{s};
    ComplexF v = p.expr();
    p.ws();
    if (p.i != s.size()) p.fail("trailing input");
    return v;
}

}  // namespace cremona
