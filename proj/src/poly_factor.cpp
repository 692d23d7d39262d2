#include <cmath>
#include <limits>

#include "cremona/numerics.hpp"
#include "cremona/poly.hpp"

namespace cremona {

namespace {

long double to_ld(const Integer& z) {
    if (z.fits_slong_p()) return (long double)z.get_si();
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::ldexp((long double)m, int(e));
}

bool round_to(long double v, Integer& out) {
    long double r = std::round(v);
    if (!(std::fabs(r) < 9.0e18L)) return false;
    out = Integer((long)(long long)r);
    return true;
}

// candidates a + b*sqrt(d) from numeric roots of the rational norm polynomial
std::vector<Scalar> numeric_candidates(const UPoly& q, long long d) {
    bool rational = true;
    for (auto& c : q.coeffs()) rational = rational && c.is_rational();
    UPoly N = rational ? q : q * q.conj();
    Integer den = 1;
    for (auto& c : N.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.a().get_den().get_mpz_t());
    std::vector<ComplexL> co;
    std::vector<Integer> ic;
    for (auto& c : N.coeffs()) {
        Rational v = c.a() * Rational(den);
        ic.push_back(v.get_num());
        co.push_back(ComplexL(to_ld(v.get_num()), 0));
    }
    Integer C = abs(ic.back());
    std::vector<ComplexL> roots;
    try {
        roots = poly_roots_ld(co);
    } catch (const Error&) {
        return {};
    }
    Integer C2 = 2 * C;
    long double c2 = to_ld(C2);
    std::vector<Scalar> out;
    auto add = [&](const Integer& na, const Integer& nb) {
        Rational a(na, C2), b(nb, C2);
        a.canonicalize();
        b.canonicalize();
        Scalar s = d == 0 ? Scalar(a) : Scalar(a, b, Rational((long)d));
        for (auto& o : out)
            if (o == s) return;
        out.push_back(s);
    };
    Integer na, nb;
    if (d == 0 || d > 0) {
        for (auto& r : roots) {
            if (std::fabs(r.imag()) > 1e-6L * (1 + std::fabs(r.real()))) continue;
            if (round_to(r.real() * c2, na)) add(na, Integer(0));
        }
    }
    if (d < 0) {
        long double sd = std::sqrt((long double)(-d));
        for (auto& r : roots)
            if (round_to(r.real() * c2, na) && round_to(r.imag() * c2 / sd, nb)) add(na, nb);
    }
    if (d > 0) {
        long double sd = std::sqrt((long double)d);
        std::vector<long double> re;
        for (auto& r : roots)
            if (std::fabs(r.imag()) <= 1e-6L * (1 + std::fabs(r.real()))) re.push_back(r.real());
        for (std::size_t i = 0; i < re.size(); ++i)
            for (std::size_t j = 0; j < re.size(); ++j) {
                if (i == j) continue;
                if (round_to((re[i] + re[j]) / 2 * c2, na) && round_to((re[i] - re[j]) / (2 * sd) * c2, nb)) add(na, nb);
            }
    }
    return out;
}

void find_roots(UPoly q, long long d, FieldRoots& out) {
    while (q.degree() >= 1) {
        if (q.degree() == 1) {
            out.roots.push_back(-q.coeff(0) / q.coeff(1));
            return;
        }
        if (q.degree() == 2) {
            Scalar a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
            Scalar disc = b * b - Scalar(4) * a * c, sq;
            if (!field_sqrt(disc, d, sq)) {
                out.complete = false;
                return;
            }
            Scalar inv = (Scalar(2) * a).inverse();
            out.roots.push_back((-b + sq) * inv);
            out.roots.push_back((-b - sq) * inv);
            return;
        }
        bool found = false;
        for (auto& c : numeric_candidates(q, d)) {
            if (!q.eval(c).is_zero()) continue;
            out.roots.push_back(c);
            UPoly qq, r;
            q.divrem(UPoly({-c, Scalar(1)}), qq, r);
            q = qq;
            found = true;
            break;
        }
        if (!found) {
            out.complete = false;
            return;
        }
    }
}

}  // namespace

FieldRoots roots_in_field(const UPoly& p, long long d) {
    if (p.is_zero()) throw Error("ZeroPolynomial", "roots of the zero polynomial");
    long long dd = merge_field(d, p.field());
    FieldRoots out;
    find_roots(squarefree_part(p), dd, out);
    return out;
}

LinearSplit linear_factors(const HomPoly& c, long long d) {
    if (c.is_zero()) throw Error("ZeroPolynomial", "factoring the zero polynomial");
    long long dd = merge_field(d, c.field());
    LinearSplit out;
    auto mn = c.min_exponents();
    for (int v = 0; v < 3; ++v)
        if (mn[v] > 0)
            out.factors.push_back({LinearForm(Scalar(v == 0), Scalar(v == 1), Scalar(v == 2)), int(mn[v])});
    HomPoly r = c.divide_monomial(mn[0], mn[1], mn[2]);
    if (r.degree() == 0) {
        out.residual = r;
        return out;
    }
    int n = r.degree();
    int perm[3] = {0, 1, 2};
    long sr = 0, ss = 0;
    bool found = false;
    for (int v = 0; v < 3 && !found; ++v) {
        unsigned e[3] = {0, 0, 0};
        e[v] = unsigned(n);
        if (!r.coeff(e[0], e[1], e[2]).is_zero()) {
            perm[0] = v;
            int k = 1;
            for (int w = 0; w < 3; ++w)
                if (w != v) perm[k++] = w;
            found = true;
        }
    }
    for (long a = 1; a < 50 && !found; ++a)
        for (long b = 1; b <= a && !found; ++b)
            if (!r.eval({Scalar(1), Scalar(a), Scalar(b)}).is_zero()) {
                sr = a;
                ss = b;
                found = true;
            }
    if (!found) throw Error("ResourceLimit", "no chart for linear factors");
    // original coordinates in terms of the chart
    std::array<HomPoly, 3> im;
    HomPoly x = HomPoly::var(0);
    im[perm[0]] = x;
    im[perm[1]] = HomPoly::var(1) + x.scaled(Scalar(sr));
    im[perm[2]] = HomPoly::var(2) + x.scaled(Scalar(ss));
    HomPoly rc = r.substitute(im);
    std::vector<Scalar> U(n + 1, Scalar(0)), V(n + 1, Scalar(0));
    for (auto& [k, v] : rc.terms()) {
        if (ez(k) == 0) U[ex(k)] = v;
        if (ey(k) == 0) V[ex(k)] = v;
    }
    FieldRoots ru = roots_in_field(UPoly(U), dd), rv = roots_in_field(UPoly(V), dd);
    for (auto& u : ru.roots)
        for (auto& w : rv.roots) {
            if (r.degree() == 0) break;
            std::array<Scalar, 3> co;
            co[perm[0]] = Scalar(1) + u * Scalar(sr) + w * Scalar(ss);
            co[perm[1]] = -u;
            co[perm[2]] = -w;
            LinearForm L(co[0], co[1], co[2]);
            HomPoly lp = L.poly();
            int mult = 0;
            while (r.degree() > 0) {
                auto q = divide_exact(r, lp);
                if (!q) break;
                r = std::move(*q);
                ++mult;
            }
            if (mult) out.factors.push_back({L, mult});
        }
    out.residual = r;
    return out;
}

std::optional<std::vector<LinearFactor>> factor_linear_cubic(const HomPoly& c, long long d) {
    LinearSplit s = linear_factors(c, d);
    if (s.residual.degree() > 0) return std::nullopt;
    return s.factors;
}

}  // namespace cremona
