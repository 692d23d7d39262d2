#include "cremona/scalar.hpp"

#include <cmath>
#include <sstream>

namespace cremona {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error("ParseError", "bad rational '" + s + "'");
    q.canonicalize();
    if (sgn(q.get_den()) == 0) throw Error("DivisionByZero", s);
    return q;
}

static void strip_square(Integer& n, Integer& s, const Integer& p) {
    Integer p2 = p * p;
    while (n % p2 == 0) {
        n /= p2;
        s *= p;
    }
}

std::pair<Rational, long long> squarefree_split(const Rational& q) {
    if (sgn(q) == 0) return {Rational(0), 0};
    Integer n = q.get_num() * q.get_den();
    Integer s = 1;
    int sign = sgn(n) < 0 ? -1 : 1;
    n = abs(n);
    strip_square(n, s, 2);
    for (unsigned long p = 3; p <= 1000000 && Integer(p) * p <= n; p += 2) strip_square(n, s, Integer(p));
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        s *= r;
        n = 1;
    }
    if (!n.fits_slong_p()) throw Error("UnsupportedField", "discriminant too large");
    Rational scale(s, q.get_den());
    scale.canonicalize();
    return {scale, sign * n.get_si()};
}

bool rational_sqrt(const Rational& q, Rational& out) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t())) return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    out = Rational(n, d);
    out.canonicalize();
    return true;
}

Scalar::Scalar(const Rational& a, const Rational& b, const Rational& d) : a_(a) {
    if (sgn(b) == 0 || sgn(d) == 0) return;
    auto [s, D] = squarefree_split(d);
    if (D == 1) {
        a_ += b * s;
        return;
    }
    b_ = b * s;
    d_ = D;
}

Scalar Scalar::sqrt_of(const Rational& d) { return Scalar(Rational(0), Rational(1), d); }

void Scalar::fix() {
    if (sgn(b_) == 0) d_ = 0;
}

long long merge_field(long long d1, long long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw Error("IncompatibleField", "sqrt(" + std::to_string(d1) + ") vs sqrt(" + std::to_string(d2) + ")");
}

long long merge_field(const Scalar& x, const Scalar& y) { return merge_field(x.d_, y.d_); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.d_ == 0) {
        a_ += o.a_;
        return *this;
    }
    d_ = merge_field(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    fix();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (o.d_ == 0) {
        a_ -= o.a_;
        return *this;
    }
    d_ = merge_field(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    fix();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (d_ == 0 && o.d_ == 0) {
        a_ *= o.a_;
        return *this;
    }
    long long d = merge_field(d_, o.d_);
    Rational na = a_ * o.a_ + Rational((long)d) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = d;
    fix();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of 0");
    if (d_ == 0) {
        Scalar r;
        r.a_ = 1 / a_;
        return r;
    }
    Rational n = norm();
    Scalar r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("DivisionByZero", "division by 0");
    if (o.d_ == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar r(1), base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

static std::size_t qdigits(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 10) + mpz_sizeinbase(q.get_den().get_mpz_t(), 10);
}

std::size_t Scalar::digits() const { return qdigits(a_) + (d_ ? qdigits(b_) : 0); }

std::string Scalar::str() const {
    if (d_ == 0) return to_string(a_);
    std::string root = "sqrt(" + std::to_string(d_) + ")";
    std::string bpart;
    Rational bb = abs(b_);
    bpart = (bb == 1) ? root : to_string(bb) + "*" + root;
    if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + bpart;
    return to_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + bpart;
}

ComplexF embed_complex(const Scalar& x) {
    double a = x.a().get_d();
    if (x.d() == 0) return {a, 0.0};
    double b = x.b().get_d();
    if (x.d() > 0) return {a + b * std::sqrt(double(x.d())), 0.0};
    return {a, b * std::sqrt(double(-x.d()))};
}

std::complex<long double> embed_complex_ld(const Scalar& x) {
    auto ld = [](const Rational& q) {
        long exp_n = 0, exp_d = 0;
        double n = mpz_get_d_2exp(&exp_n, q.get_num().get_mpz_t());
        double d = mpz_get_d_2exp(&exp_d, q.get_den().get_mpz_t());
        return std::ldexp((long double)n / (long double)d, int(exp_n - exp_d));
    };
    long double a = ld(x.a());
    if (x.d() == 0) return {a, 0.0L};
    long double b = ld(x.b());
    if (x.d() > 0) return {a + b * std::sqrt((long double)x.d()), 0.0L};
    return {a, b * std::sqrt((long double)-x.d())};
}

bool field_sqrt(const Scalar& x, long long d, Scalar& out) {
    long long dd = merge_field(x.d(), d);
    if (x.is_zero()) {
        out = Scalar(0);
        return true;
    }
    if (x.is_rational()) {
        Rational r;
        if (rational_sqrt(x.a(), r)) {
            out = Scalar(r);
            return true;
        }
        if (dd == 0) return false;
        // a = d*q^2 gives q*sqrt(d)
        if (rational_sqrt(x.a() / Rational((long)dd), r)) {
            out = Scalar(Rational(0), r, Rational((long)dd));
            return true;
        }
        return false;
    }
    // (u + v sqrt d)^2 = a + b sqrt d
    Rational n;
    if (!rational_sqrt(x.norm(), n)) return false;
    for (int sgn_ = -1; sgn_ <= 1; sgn_ += 2) {
        Rational u2 = (x.a() + sgn_ * n) / 2;
        Rational u;
        if (sgn(u2) == 0 || !rational_sqrt(u2, u)) continue;
        Rational v = x.b() / (2 * u);
        Scalar cand(u, v, Rational((long)dd));
        if (cand * cand == x) {
            out = cand;
            return true;
        }
    }
    return false;
}

// UPoly

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(const Scalar& c, int k) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = c;
    return UPoly(v);
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

UPoly operator+(const UPoly& p, const UPoly& q) {
    std::vector<Scalar> c(std::max(p.c_.size(), q.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
    return UPoly(c);
}

UPoly operator-(const UPoly& p, const UPoly& q) { return p + (-q); }

UPoly operator*(const UPoly& p, const UPoly& q) {
    if (p.is_zero() || q.is_zero()) return UPoly();
    std::vector<Scalar> c(p.c_.size() + q.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return UPoly(c);
}

UPoly UPoly::scaled(const Scalar& s) const {
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Scalar> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Scalar(long(i));
    return UPoly(c);
}

UPoly UPoly::conj() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = x.conj();
    return r;
}

Scalar UPoly::eval(const Scalar& t) const {
    Scalar r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + UPoly(*it);
    return r;
}

void UPoly::divrem(const UPoly& d, UPoly& q, UPoly& r) const {
    if (d.is_zero()) throw Error("DivisionByZero", "polynomial division by 0");
    r = *this;
    if (degree() < d.degree()) {
        q = UPoly();
        return;
    }
    std::vector<Scalar> qc(degree() - d.degree() + 1, Scalar(0));
    Scalar inv = d.lead().inverse();
    std::vector<Scalar> rc = c_;
    for (int i = degree(); i >= d.degree(); --i) {
        if (rc[i].is_zero()) continue;
        Scalar f = rc[i] * inv;
        qc[i - d.degree()] = f;
        for (int j = 0; j <= d.degree(); ++j) rc[i - d.degree() + j] -= f * d.c_[j];
    }
    q = UPoly(qc);
    r = UPoly(rc);
}

long long UPoly::field() const {
    long long d = 0;
    for (auto& s : c_) d = merge_field(d, s.d());
    return d;
}

static std::string coeff_str(const Scalar& c) {
    if (c.is_rational()) return c.str();
    return "(" + c.str() + ")";
}

std::string UPoly::str(const std::string& v) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Scalar c = c_[i];
        if (c.is_zero()) continue;
        bool neg = c.is_rational() && sgn(c.a()) < 0;
        if (neg) c = -c;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        std::string mono = i == 0 ? "" : (i == 1 ? v : v + "^" + std::to_string(i));
        if (mono.empty()) os << coeff_str(c);
        else if (c.is_one()) os << mono;
        else os << coeff_str(c) << "*" << mono;
    }
    return os.str();
}

UPoly gcd(UPoly p, UPoly q) {
    while (!q.is_zero()) {
        UPoly qq, r;
        p.divrem(q, qq, r);
        p = std::move(q);
        q = r.monic();
    }
    return p.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.monic();
    UPoly g = gcd(p, p.derivative());
    UPoly q, r;
    p.divrem(g, q, r);
    return q.monic();
}

// RatFunc

RatFunc::RatFunc(UPoly num, UPoly den, std::string var)
    : num_(std::move(num)), den_(std::move(den)), var_(std::move(var)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UPoly(Scalar(1));
        return;
    }
    UPoly g = gcd(num_, den_);
    UPoly q, r;
    num_.divrem(g, q, r);
    num_ = q;
    den_.divrem(g, q, r);
    den_ = q;
    Scalar l = den_.lead().inverse();
    num_ = num_.scaled(l);
    den_ = den_.scaled(l);
}

static const std::string& pick_var(const RatFunc& f, const RatFunc& g) {
    // constants carry the default name and adopt the other side's
    bool fc = f.num().degree() <= 0 && f.den().degree() <= 0;
    bool gc = g.num().degree() <= 0 && g.den().degree() <= 0;
    if (!fc && !gc && f.var() != g.var()) throw Error("VariableMismatch", f.var() + " vs " + g.var());
    return fc ? g.var() : f.var();
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_, pick_var(f, g));
}
RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }
RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.num_, f.den_ * g.den_, pick_var(f, g));
}
RatFunc operator/(const RatFunc& f, const RatFunc& g) {
    if (g.is_zero()) throw Error("DivisionByZero", "rational function division by 0");
    return RatFunc(f.num_ * g.den_, f.den_ * g.num_, pick_var(f, g));
}

RatFunc RatFunc::compose(const RatFunc& g) const {
    auto horner = [&](const UPoly& p) {
        RatFunc r(Scalar(0), g.var());
        for (int i = p.degree(); i >= 0; --i) r = r * g + RatFunc(p.coeff(i), g.var());
        return r;
    };
    return horner(num_) / horner(den_);
}

Scalar RatFunc::eval(const Scalar& t) const {
    Scalar d = den_.eval(t);
    if (d.is_zero()) throw Error("PoleAtParameter", "denominator vanishes");
    return num_.eval(t) / d;
}

std::string RatFunc::str() const {
    if (den_.degree() == 0) return num_.str(var_);
    return "(" + num_.str(var_) + ")/(" + den_.str(var_) + ")";
}

}  // namespace cremona
