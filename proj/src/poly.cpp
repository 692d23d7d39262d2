#include "cremona/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "cremona/detail/expr.hpp"

namespace cremona {

namespace {

const char* kVar[3] = {"x", "y", "z"};

std::string coeff_str(const Scalar& c) {
    if (c.is_rational()) return c.str();
    return "(" + c.str() + ")";
}

std::string mono_str(const unsigned e[], int nv) {
    std::string s;
    for (int v = 0; v < nv; ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += kVar[v];
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

// shared term printer, terms already in print order
template <class It, class Exps>
std::string terms_str(It b, It e, Exps exps, int nv) {
    if (b == e) return "0";
    std::ostringstream os;
    bool first = true;
    for (; b != e; ++b) {
        Scalar c = b->second;
        bool neg = c.is_rational() && sgn(c.a()) < 0;
        if (neg) c = -c;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        unsigned ee[3];
        exps(b->first, ee);
        std::string m = mono_str(ee, nv);
        if (m.empty()) os << coeff_str(c);
        else if (c.is_one()) os << m;
        else os << coeff_str(c) << "*" << m;
    }
    return os.str();
}

}  // namespace

// HomPoly

HomPoly HomPoly::var(int v) {
    HomPoly p(1);
    Key k = v == 0 ? pack(1, 0, 0) : v == 1 ? pack(0, 1, 0) : pack(0, 0, 1);
    p.t_.push_back({k, Scalar(1)});
    return p;
}

HomPoly HomPoly::constant(const Scalar& c) {
    HomPoly p(0);
    if (!c.is_zero()) p.t_.push_back({0, c});
    return p;
}

HomPoly HomPoly::monomial(const Scalar& c, unsigned i, unsigned j, unsigned k) {
    HomPoly p(int(i + j + k));
    if (!c.is_zero()) p.t_.push_back({pack(i, j, k), c});
    return p;
}

HomPoly HomPoly::from_terms(int degree, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    HomPoly p(degree);
    for (auto& t : terms) {
        if (int(ex(t.first) + ey(t.first) + ez(t.first)) != degree)
            throw Error("DegreeMismatch", "term of wrong degree");
        if (!p.t_.empty() && p.t_.back().first == t.first) {
            p.t_.back().second += t.second;
            if (p.t_.back().second.is_zero()) p.t_.pop_back();
        } else if (!t.second.is_zero()) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

Scalar HomPoly::coeff(unsigned i, unsigned j, unsigned k) const {
    Key key = pack(i, j, k);
    auto it = std::lower_bound(t_.begin(), t_.end(), key, [](const Term& t, Key kk) { return t.first > kk; });
    if (it != t_.end() && it->first == key) return it->second;
    return Scalar(0);
}

HomPoly HomPoly::operator-() const {
    HomPoly r(*this);
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

static void merge_add(std::vector<Term>& a, const std::vector<Term>& b, bool sub) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first > a[i].first) {
            out.push_back({b[j].first, sub ? -b[j].second : b[j].second});
            ++j;
        } else {
            Scalar c = sub ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero()) out.push_back({a[i].first, std::move(c)});
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) deg_ = o.deg_;
    if (deg_ != o.deg_) throw Error("DegreeMismatch", "adding forms of degree " + std::to_string(deg_) + " and " + std::to_string(o.deg_));
    merge_add(t_, o.t_, false);
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) deg_ = o.deg_;
    if (deg_ != o.deg_) throw Error("DegreeMismatch", "adding forms of degree " + std::to_string(deg_) + " and " + std::to_string(o.deg_));
    merge_add(t_, o.t_, true);
    return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly r(a.deg_ + b.deg_);
    if (r.deg_ >= int(kExpMask)) throw Error("ResourceLimit", "degree exceeds exponent range");
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1 || b.size() == 1) {
        const HomPoly& m = a.size() == 1 ? a : b;
        const HomPoly& p = a.size() == 1 ? b : a;
        Key mk = m.t_[0].first;
        const Scalar& mc = m.t_[0].second;
        r.t_.reserve(p.size());
        for (auto& t : p.t_) r.t_.push_back({t.first + mk, t.second * mc});
        return r;
    }
    std::unordered_map<Key, Scalar> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
    Scalar tmp;
    for (auto& ta : a.t_) {
        for (auto& tb : b.t_) {
            tmp = ta.second;
            tmp *= tb.second;
            acc[ta.first + tb.first] += tmp;
        }
    }
    r.t_.reserve(acc.size());
    for (auto& kv : acc)
        if (!kv.second.is_zero()) r.t_.push_back({kv.first, std::move(kv.second)});
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
    return r;
}

HomPoly HomPoly::scaled(const Scalar& s) const {
    if (s.is_zero()) return HomPoly(deg_);
    HomPoly r(*this);
    for (auto& t : r.t_) t.second *= s;
    return r;
}

HomPoly HomPoly::pow(unsigned long e) const {
    if (e == 0) return constant(Scalar(1));
    if ((long long)deg_ * (long long)e >= (long long)kExpMask) throw Error("ResourceLimit", "degree exceeds exponent range");
    if (is_monomial()) {
        Key k = t_[0].first;
        return monomial(t_[0].second.pow(e), unsigned(ex(k) * e), unsigned(ey(k) * e), unsigned(ez(k) * e));
    }
    HomPoly base = *this, r = constant(Scalar(1));
    while (true) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (!e) break;
        base = base * base;
    }
    return r;
}

HomPoly HomPoly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(lead().inverse());
}

HomPoly HomPoly::diff(int v) const {
    HomPoly r(std::max(0, deg_ - 1));
    for (auto& t : t_) {
        unsigned e[3] = {ex(t.first), ey(t.first), ez(t.first)};
        if (e[v] == 0) continue;
        Scalar c = t.second * Scalar(long(e[v]));
        --e[v];
        r.t_.push_back({pack(e[0], e[1], e[2]), std::move(c)});
    }
    // lowering one exponent keeps the lex order
    return r;
}

HomPoly HomPoly::substitute(const std::array<HomPoly, 3>& im) const {
    int m = -1;
    for (auto& g : im) {
        if (g.is_zero()) continue;
        if (m >= 0 && g.degree() != m) throw Error("DegreeMismatch", "substitution images of unequal degree");
        m = g.degree();
    }
    if (m < 0) m = im[0].degree();
    long long ndl = (long long)deg_ * m;
    if (ndl >= (long long)kExpMask) throw Error("ResourceLimit", "degree exceeds exponent range");
    int nd = int(ndl);
    if (is_zero()) return HomPoly(nd);
    bool mono = true;
    for (auto& g : im) mono = mono && g.size() <= 1;
    if (mono) {
        std::vector<Term> out;
        for (auto& t : t_) {
            unsigned e[3] = {ex(t.first), ey(t.first), ez(t.first)};
            Scalar c = t.second;
            Key k = 0;
            bool zero = false;
            for (int v = 0; v < 3 && !zero; ++v) {
                if (e[v] == 0) continue;
                if (im[v].is_zero()) {
                    zero = true;
                    break;
                }
                Key gk = im[v].t_[0].first;
                c *= im[v].t_[0].second.pow(e[v]);
                k += pack(Key(ex(gk)) * e[v], Key(ey(gk)) * e[v], Key(ez(gk)) * e[v]);
            }
            if (!zero) out.push_back({k, std::move(c)});
        }
        return from_terms(nd, std::move(out));
    }
    // powers cached on demand
    std::array<std::vector<HomPoly>, 3> pw;
    auto power = [&](int v, unsigned e) -> const HomPoly& {
        auto& c = pw[v];
        if (c.empty()) c.push_back(constant(Scalar(1)));
        while (c.size() <= e) c.push_back(c.back() * im[v]);
        return c[e];
    };
    HomPoly r(nd);
    std::size_t i = 0;
    while (i < t_.size()) {
        unsigned xi = ex(t_[i].first);
        HomPoly inner(m * (deg_ - int(xi)));
        std::size_t j = i;
        while (j < t_.size() && ex(t_[j].first) == xi) {
            Key k = t_[j].first;
            inner += (power(1, ey(k)) * power(2, ez(k))).scaled(t_[j].second);
            ++j;
        }
        r += power(0, xi) * inner;
        i = j;
    }
    r.deg_ = nd;
    return r;
}

Scalar HomPoly::eval(const std::array<Scalar, 3>& p) const {
    Scalar s(0);
    if (t_.size() < 8) {
        for (auto& t : t_) s += t.second * p[0].pow(ex(t.first)) * p[1].pow(ey(t.first)) * p[2].pow(ez(t.first));
        return s;
    }
    std::array<std::vector<Scalar>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].assign(deg_ + 1, Scalar(1));
        for (int e = 1; e <= deg_; ++e) pw[v][e] = pw[v][e - 1] * p[v];
    }
    for (auto& t : t_) s += t.second * pw[0][ex(t.first)] * pw[1][ey(t.first)] * pw[2][ez(t.first)];
    return s;
}

ComplexF HomPoly::eval_complex(const std::array<ComplexF, 3>& p) const {
    ComplexF s(0);
    for (auto& t : t_)
        s += embed_complex(t.second) * std::pow(p[0], int(ex(t.first))) * std::pow(p[1], int(ey(t.first))) *
             std::pow(p[2], int(ez(t.first)));
    return s;
}

long long HomPoly::field() const {
    long long d = 0;
    for (auto& t : t_) d = merge_field(d, t.second.d());
    return d;
}

std::size_t HomPoly::digits() const {
    std::size_t n = 0;
    for (auto& t : t_) n += t.second.digits();
    return n;
}

std::array<unsigned, 3> HomPoly::min_exponents() const {
    std::array<unsigned, 3> m = {~0u, ~0u, ~0u};
    if (is_zero()) return {0, 0, 0};
    for (auto& t : t_) {
        m[0] = std::min(m[0], ex(t.first));
        m[1] = std::min(m[1], ey(t.first));
        m[2] = std::min(m[2], ez(t.first));
    }
    return m;
}

HomPoly HomPoly::divide_monomial(unsigned i, unsigned j, unsigned k) const {
    HomPoly r(deg_ - int(i + j + k));
    Key mk = pack(i, j, k);
    r.t_.reserve(t_.size());
    for (auto& t : t_) {
        if (ex(t.first) < i || ey(t.first) < j || ez(t.first) < k) throw Error("InexactDivision", "monomial does not divide");
        r.t_.push_back({t.first - mk, t.second});
    }
    return r;
}

std::string HomPoly::str() const {
    return terms_str(
        t_.begin(), t_.end(),
        [](Key k, unsigned* e) {
            e[0] = ex(k);
            e[1] = ey(k);
            e[2] = ez(k);
        },
        3);
}

HomPoly HomPoly::parse(const std::string& s, int degree_hint) {
    auto g = detail::parse_gen(s, {"x", "y", "z"});
    if (g.empty()) return HomPoly(std::max(degree_hint, 0));
    int deg = -1;
    std::vector<Term> terms;
    for (auto& [e, c] : g) {
        int d = int(e[0] + e[1] + e[2]);
        if (deg >= 0 && d != deg) throw Error("DegreeMismatch", "polynomial '" + s + "' is not homogeneous");
        deg = d;
        terms.push_back({pack(e[0], e[1], e[2]), c});
    }
    return from_terms(deg, std::move(terms));
}

HomPoly jacobian_det(const std::array<HomPoly, 3>& f) {
    HomPoly m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = f[i].diff(j);
    HomPoly d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    int nu = std::max({f[0].degree(), f[1].degree(), f[2].degree()});
    if (d.is_zero()) return HomPoly(3 * (nu - 1));
    return d;
}

// LinearForm

LinearForm::LinearForm(const Scalar& a0, const Scalar& a1, const Scalar& a2) : c_{a0, a1, a2} {
    int i = 0;
    while (i < 3 && c_[i].is_zero()) ++i;
    if (i == 3) throw Error("ZeroLine", "linear form with all coefficients zero");
    Scalar inv = c_[i].inverse();
    for (auto& c : c_) c *= inv;
}

HomPoly LinearForm::poly() const {
    HomPoly p(1);
    for (int v = 0; v < 3; ++v) p += HomPoly::var(v).scaled(c_[v]);
    return p;
}

LinearForm LinearForm::from_poly(const HomPoly& p) {
    if (p.degree() != 1) throw Error("DegreeMismatch", "not a linear form");
    return LinearForm(p.coeff(1, 0, 0), p.coeff(0, 1, 0), p.coeff(0, 0, 1));
}

std::array<HomPoly, 3> parametrize_line(const LinearForm& L) {
    HomPoly s = HomPoly::var(0), t = HomPoly::var(1);
    if (!L[0].is_zero()) return {-(s.scaled(L[1]) + t.scaled(L[2])), s, t};
    if (!L[1].is_zero()) return {s, -t.scaled(L[2]), t};
    return {s, t, HomPoly(1)};
}

// BiPoly

BiPoly::BiPoly(const Scalar& c) {
    if (!c.is_zero()) t_[{0, 0}] = c;
}
BiPoly BiPoly::x() { return monomial(Scalar(1), 1, 0); }
BiPoly BiPoly::y() { return monomial(Scalar(1), 0, 1); }
BiPoly BiPoly::monomial(const Scalar& c, unsigned i, unsigned j) {
    BiPoly p;
    if (!c.is_zero()) p.t_[{i, j}] = c;
    return p;
}
BiPoly BiPoly::from_upoly_y(const UPoly& p) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term({0u, unsigned(i)}, p.coeff(i));
    return r;
}

void BiPoly::add_term(const Exp2& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

int BiPoly::degree() const { return t_.empty() ? -1 : int(t_.begin()->first.first + t_.begin()->first.second); }
int BiPoly::degree_x() const {
    int d = -1;
    for (auto& [e, c] : t_) d = std::max(d, int(e.first));
    return d;
}
int BiPoly::degree_y() const {
    int d = -1;
    for (auto& [e, c] : t_) d = std::max(d, int(e.second));
    return d;
}
Scalar BiPoly::coeff(unsigned i, unsigned j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Scalar(0) : it->second;
}
BiPoly BiPoly::top() const {
    BiPoly r;
    int d = degree();
    for (auto& [e, c] : t_) {
        if (int(e.first + e.second) != d) break;
        r.t_.emplace(e, c);
    }
    return r;
}
BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
}
BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a);
    for (auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}
BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (auto& [ea, ca] : a.t_)
        for (auto& [eb, cb] : b.t_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
}
BiPoly BiPoly::scaled(const Scalar& s) const {
    if (s.is_zero()) return BiPoly();
    BiPoly r(*this);
    for (auto& kv : r.t_) kv.second *= s;
    return r;
}
BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r(Scalar(1)), b(*this);
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}
BiPoly BiPoly::diff(int v) const {
    BiPoly r;
    for (auto& [e, c] : t_) {
        unsigned k = v == 0 ? e.first : e.second;
        if (k == 0) continue;
        Exp2 ne = v == 0 ? Exp2{e.first - 1, e.second} : Exp2{e.first, e.second - 1};
        r.add_term(ne, c * Scalar(long(k)));
    }
    return r;
}
BiPoly BiPoly::compose(const BiPoly& fx, const BiPoly& fy) const {
    std::vector<BiPoly> px{BiPoly(Scalar(1))}, py{BiPoly(Scalar(1))};
    BiPoly r;
    for (auto& [e, c] : t_) {
        while (px.size() <= e.first) px.push_back(px.back() * fx);
        while (py.size() <= e.second) py.push_back(py.back() * fy);
        r = r + (px[e.first] * py[e.second]).scaled(c);
    }
    return r;
}
Scalar BiPoly::eval(const Scalar& x, const Scalar& y) const {
    Scalar s(0);
    for (auto& [e, c] : t_) s += c * x.pow(e.first) * y.pow(e.second);
    return s;
}
bool BiPoly::depends_on_x() const {
    for (auto& [e, c] : t_)
        if (e.first > 0) return true;
    return false;
}
UPoly BiPoly::as_upoly_y() const {
    if (depends_on_x()) throw Error("DegreeMismatch", "polynomial depends on x");
    std::vector<Scalar> c(std::max(degree_y() + 1, 0), Scalar(0));
    for (auto& [e, cc] : t_) c[e.second] = cc;
    return UPoly(std::move(c));
}
HomPoly BiPoly::homogenize(int degree) const {
    std::vector<Term> terms;
    for (auto& [e, c] : t_) {
        int k = degree - int(e.first + e.second);
        if (k < 0) throw Error("DegreeMismatch", "homogenizing below the total degree");
        terms.push_back({pack(e.first, e.second, unsigned(k)), c});
    }
    return HomPoly::from_terms(degree, std::move(terms));
}
BiPoly BiPoly::dehomogenize(const HomPoly& p) {
    BiPoly r;
    for (auto& [k, c] : p.terms()) r.add_term({ex(k), ey(k)}, c);
    return r;
}
std::string BiPoly::str() const {
    return terms_str(
        t_.begin(), t_.end(),
        [](const Exp2& k, unsigned* e) {
            e[0] = k.first;
            e[1] = k.second;
        },
        2);
}
BiPoly BiPoly::parse(const std::string& s) {
    auto g = detail::parse_gen(s, {"x", "y"});
    BiPoly r;
    for (auto& [e, c] : g) r.add_term({e[0], e[1]}, c);
    return r;
}

}  // namespace cremona
