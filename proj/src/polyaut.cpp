#include "cremona/polyaut.hpp"

#include "cremona/detail/expr.hpp"

namespace cremona {

namespace {

BiPoly upoly_in_y(const UPoly& p) { return BiPoly::from_upoly_y(p); }

BiPoly affine_form(const Scalar& a, const Scalar& b, const Scalar& c) {
    return BiPoly::x().scaled(a) + BiPoly::y().scaled(b) + BiPoly(c);
}

}  // namespace

BiPoly PolyAut::jacobian() const {
    return f1_.diff(0) * f2_.diff(1) - f1_.diff(1) * f2_.diff(0);
}

PolyAut PolyAut::parse(const std::string& s) {
    auto parts = detail::split_top(s, ',');
    if (parts.size() != 2) throw Error("ParseError", "automorphism needs two components: " + s);
    return PolyAut(BiPoly::parse(parts[0]), BiPoly::parse(parts[1]));
}

PolyAut aut_compose(const PolyAut& f, const PolyAut& g) {
    return PolyAut(f.f1().compose(g.f1(), g.f2()), f.f2().compose(g.f1(), g.f2()));
}

RatMap aut_to_ratmap(const PolyAut& f) {
    int d = std::max(1, f.degree());
    return normalize({f.f1().homogenize(d), f.f2().homogenize(d), HomPoly::var(2).pow(d)});
}

// factors

JungFactor make_affine(const std::array<Scalar, 6>& m) {
    JungFactor f;
    f.affine = true;
    f.A.m = m;
    return f;
}

JungFactor make_elementary(const Scalar& alpha, const UPoly& P, const Scalar& beta, const Scalar& gamma) {
    JungFactor f;
    f.affine = false;
    f.E = {alpha, beta, gamma, P};
    return f;
}

PolyAut JungFactor::as_aut() const {
    if (affine) {
        auto& m = A.m;
        return PolyAut(affine_form(m[0], m[1], m[2]), affine_form(m[3], m[4], m[5]));
    }
    return PolyAut(BiPoly::x().scaled(E.alpha) + upoly_in_y(E.P), affine_form(0, E.beta, E.gamma));
}

PolyAut JungFactor::inverse() const {
    if (affine) {
        auto& m = A.m;
        Scalar det = m[0] * m[4] - m[1] * m[3];
        if (det.is_zero()) throw Error("NotAutomorphism", "singular affine factor");
        Scalar i0 = m[4] / det, i1 = -m[1] / det, i3 = -m[3] / det, i4 = m[0] / det;
        return PolyAut(affine_form(i0, i1, -(i0 * m[2] + i1 * m[5])),
                       affine_form(i3, i4, -(i3 * m[2] + i4 * m[5])));
    }
    if (E.alpha.is_zero() || E.beta.is_zero()) throw Error("NotAutomorphism", "degenerate elementary factor");
    // y' = (y - gamma)/beta, x' = (x - P(y'))/alpha
    BiPoly yv = affine_form(0, E.beta.inverse(), -E.gamma / E.beta);
    BiPoly py = upoly_in_y(E.P).compose(BiPoly::x(), yv);
    return PolyAut((BiPoly::x() - py).scaled(E.alpha.inverse()), yv);
}

bool JungFactor::in_A() const { return affine || E.P.degree() <= 1; }
bool JungFactor::in_E() const { return !affine || A.triangular(); }
int JungFactor::degree() const { return affine ? 1 : std::max(1, E.P.degree()); }

std::string JungFactor::str() const { return "(" + as_aut().str() + ")"; }

PolyAut JungWord::recompose() const {
    PolyAut r;
    for (auto& f : factors) r = aut_compose(r, f.as_aut());
    return r;
}

std::string JungWord::str() const {
    if (factors.empty()) return "(x, y)";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " o ";
        s += factors[i].str();
    }
    return s;
}

namespace {

JungFactor to_elementary(const JungFactor& f) {
    if (!f.affine) return f;
    auto& m = f.A.m;
    return make_elementary(m[0], UPoly({m[2], m[1]}), m[4], m[5]);
}

JungFactor to_affine(const JungFactor& f) {
    if (f.affine) return f;
    return make_affine({f.E.alpha, f.E.P.coeff(1), f.E.P.coeff(0), Scalar(0), f.E.beta, f.E.gamma});
}

// product of two factors of the same kind
JungFactor merge(const JungFactor& a, const JungFactor& b) {
    if (a.affine && b.affine) {
        auto& p = a.A.m;
        auto& q = b.A.m;
        return make_affine({p[0] * q[0] + p[1] * q[3], p[0] * q[1] + p[1] * q[4], p[0] * q[2] + p[1] * q[5] + p[2],
                            p[3] * q[0] + p[4] * q[3], p[3] * q[1] + p[4] * q[4], p[3] * q[2] + p[4] * q[5] + p[5]});
    }
    JungFactor ea = to_elementary(a), eb = to_elementary(b);
    auto& e = ea.E;
    auto& g = eb.E;
    // (a1(a2 x + P2(y)) + P1(b2 y + g2), b1(b2 y + g2) + g1)
    UPoly P = g.P.scaled(e.alpha) + e.P.compose(UPoly({g.gamma, g.beta}));
    return make_elementary(e.alpha * g.alpha, P, e.beta * g.beta, e.beta * g.gamma + e.gamma);
}

bool is_id(const JungFactor& f) { return f.as_aut().is_identity(); }

// top(a) = c * top(b)^k
std::optional<Scalar> proportional_power(const BiPoly& a, const BiPoly& b, unsigned k) {
    BiPoly ta = a.top(), tb = b.top().pow(k);
    if (ta.terms().size() != tb.terms().size()) return std::nullopt;
    Scalar c = ta.terms().begin()->second / tb.terms().begin()->second;
    if (ta != tb.scaled(c)) return std::nullopt;
    return c;
}

}  // namespace

JungWord reduce_word(JungWord w) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<JungFactor> out;
        for (auto& f : w.factors) {
            if (is_id(f)) { changed = true; continue; }
            if (!out.empty()) {
                auto& b = out.back();
                bool both_a = b.in_A() && f.in_A();
                bool both_e = b.in_E() && f.in_E();
                if (both_a || both_e) {
                    JungFactor m = both_a ? merge(to_affine(b), to_affine(f)) : merge(b, f);
                    out.pop_back();
                    if (!is_id(m)) out.push_back(m);
                    changed = true;
                    continue;
                }
            }
            out.push_back(f);
        }
        w.factors = std::move(out);
    }
    // canonical kind for each factor: elementary only when outside A
    for (auto& f : w.factors) f = f.in_A() ? to_affine(f) : to_elementary(f);
    return w;
}

std::optional<JungWord> jung_decompose(const PolyAut& f) {
    if (f.f1().degree() > kJungDegreeCap || f.f2().degree() > kJungDegreeCap)
        throw Error("ResourceLimit", "component degree above " + std::to_string(kJungDegreeCap));
    JungWord w;
    const Scalar one(1), zero(0);
    const JungFactor sw = make_affine({zero, one, zero, one, zero, zero});
    BiPoly f1 = f.f1(), f2 = f.f2();
    while (std::max(f1.degree(), f2.degree()) > 1) {
        int d1 = f1.degree(), d2 = f2.degree();
        if (d1 <= 0 || d2 <= 0) return std::nullopt;
        if (d1 == d2) {
            auto c = proportional_power(f1, f2, 1);
            if (!c) return std::nullopt;
            f1 = f1 - f2.scaled(*c);
            w.factors.push_back(make_affine({one, *c, zero, zero, one, zero}));
        } else if (d1 > d2) {
            if (d1 % d2) return std::nullopt;
            auto c = proportional_power(f1, f2, d1 / d2);
            if (!c) return std::nullopt;
            f1 = f1 - f2.pow(d1 / d2).scaled(*c);
            w.factors.push_back(make_elementary(one, UPoly::monomial(*c, d1 / d2), one, zero));
        } else {
            if (d2 % d1) return std::nullopt;
            auto c = proportional_power(f2, f1, d2 / d1);
            if (!c) return std::nullopt;
            f2 = f2 - f1.pow(d2 / d1).scaled(*c);
            w.factors.push_back(sw);
            w.factors.push_back(make_elementary(one, UPoly::monomial(*c, d2 / d1), one, zero));
            w.factors.push_back(sw);
        }
    }
    if (f1.degree() < 1 || f2.degree() < 1) return std::nullopt;
    JungFactor last = make_affine({f1.coeff(1, 0), f1.coeff(0, 1), f1.coeff(0, 0),
                                   f2.coeff(1, 0), f2.coeff(0, 1), f2.coeff(0, 0)});
    auto& m = last.A.m;
    if ((m[0] * m[4] - m[1] * m[3]).is_zero()) return std::nullopt;
    w.factors.push_back(last);
    w = reduce_word(std::move(w));
    if (w.recompose() != f) throw Error("InternalError", "jung word does not recompose");
    return w;
}

PolyAut HenonFactor::as_aut() const {
    return PolyAut(BiPoly::y(), upoly_in_y(P) - BiPoly::x().scaled(delta));
}

PolyAut aut_inverse(const PolyAut& f) {
    auto w = jung_decompose(f);
    if (!w) throw Error("NotAutomorphism", "map is not a polynomial automorphism");
    PolyAut r;
    for (auto it = w->factors.rbegin(); it != w->factors.rend(); ++it) r = aut_compose(r, it->inverse());
    if (!aut_compose(r, f).is_identity()) throw Error("InternalError", "inverse check failed");
    return r;
}

HenonReport henon_classify(const PolyAut& f) {
    HenonReport rep;
    auto w0 = jung_decompose(f);
    if (!w0) throw Error("NotAutomorphism", "map is not a polynomial automorphism");
    std::vector<JungFactor> w = w0->factors;
    PolyAut C, Cinv;
    auto conj_by = [&](const PolyAut& X, const PolyAut& Xinv) {
        C = aut_compose(X, C);
        Cinv = aut_compose(Cinv, Xinv);
    };

    // cyclic reduction
    while (w.size() >= 2) {
        const JungFactor& first = w.front();
        const JungFactor& last = w.back();
        bool same = (first.in_A() && last.in_A()) || (first.in_E() && last.in_E());
        if (!same) break;
        JungFactor L = last;
        conj_by(L.as_aut(), L.inverse());
        w.pop_back();
        w.front() = L.in_A() && w.front().in_A() ? merge(to_affine(L), to_affine(w.front())) : merge(L, w.front());
        w = reduce_word(JungWord{w}).factors;
    }
    if (w.size() < 2) {
        rep.is_henon = false;
        rep.dyn_degree = 1;
        rep.conjugator = C;
        rep.verified = true;
        return rep;
    }
    // start with an elementary factor
    if (w.front().in_A()) {
        JungFactor F = w.front();
        conj_by(F.inverse(), F.as_aut());
        std::rotate(w.begin(), w.begin() + 1, w.end());
    }
    // Bruhat split of each affine factor: b = t1 o s o t2
    std::size_t k = w.size() / 2;
    std::vector<JungFactor> E(k), t1(k), t2(k);
    const Scalar one(1), zero(0);
    for (std::size_t i = 0; i < k; ++i) {
        E[i] = w[2 * i];
        auto& m = w[2 * i + 1].A.m;
        Scalar v = m[0] / m[3], u = (m[1] * m[3] - m[0] * m[4]) / m[3], wc = m[2] - v * m[5];
        t1[i] = make_affine({u, v, wc, zero, one, zero});
        t2[i] = make_affine({m[3], m[4], m[5], zero, one, zero});
    }
    // conjugate by t2[k-1] then by s
    conj_by(t2[k - 1].as_aut(), t2[k - 1].inverse());
    PolyAut s = PolyAut::swap();
    conj_by(s, s);
    std::vector<JungFactor> Ep(k);
    for (std::size_t i = 0; i < k; ++i) {
        const JungFactor& pre = i == 0 ? t2[k - 1] : t2[i - 1];
        Ep[i] = merge(merge(pre, E[i]), t1[i]);
    }
    // s o E'_i = T_i o (y, alpha x + P(y)), T_i = (beta x + gamma, y); conjugate by T_0^-1
    auto T = [&](std::size_t i) {
        return make_affine({Ep[i].E.beta, zero, Ep[i].E.gamma, zero, one, zero});
    };
    conj_by(T(0).inverse(), T(0).as_aut());
    rep.is_henon = true;
    rep.dyn_degree = 1;
    PolyAut H;
    for (std::size_t i = 0; i < k; ++i) {
        auto& e = Ep[i].E;
        auto& nx = Ep[(i + 1) % k].E;
        HenonFactor hf{e.P + UPoly(e.alpha * nx.gamma), -(e.alpha * nx.beta)};
        rep.dyn_degree *= hf.P.degree();
        rep.cyclic_factors.push_back(hf);
        H = aut_compose(H, hf.as_aut());
    }
    rep.conjugator = C;
    rep.verified = aut_compose(aut_compose(C, f), Cinv) == H;
    if (!rep.verified) throw Error("InternalError", "henon normal form check failed");
    return rep;
}

}  // namespace cremona
