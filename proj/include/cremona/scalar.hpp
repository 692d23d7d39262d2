#pragma once

#include <complex>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

using Integer = mpz_class;
using Rational = mpq_class;
using ComplexF = std::complex<double>;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// a + b*sqrt(d), d squarefree integer; d == 0 iff b == 0
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}
    Scalar(int v) : a_(v) {}
    Scalar(const Rational& a) : a_(a) {}
    Scalar(const Rational& a, const Rational& b, const Rational& d);

    static Scalar sqrt_of(const Rational& d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long d() const { return d_; }
    Rational discriminant() const { return Rational((long)d_); }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return d_ == 0 && a_ == 1; }
    bool is_rational() const { return d_ == 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    bool operator==(const Scalar& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar conj() const;
    Rational norm() const { return a_ * a_ - Rational((long)d_) * b_ * b_; }
    Scalar pow(unsigned long e) const;
    // total decimal digits of numerators and denominators
    std::size_t digits() const;

    std::string str() const;
    static Scalar parse(const std::string& s);

private:
    Rational a_ = 0, b_ = 0;
    long long d_ = 0;
    void fix();
    friend long long merge_field(const Scalar&, const Scalar&);
};

// common field of two scalars or IncompatibleField
long long merge_field(long long d1, long long d2);
long long merge_field(const Scalar& x, const Scalar& y);

ComplexF embed_complex(const Scalar& x);
std::complex<long double> embed_complex_ld(const Scalar& x);

// squarefree normalization: returns (s, D) with q = s^2 * D, D squarefree integer
std::pair<Rational, long long> squarefree_split(const Rational& q);
bool rational_sqrt(const Rational& q, Rational& out);
// square root inside Q(sqrt d) if it exists
bool field_sqrt(const Scalar& x, long long d, Scalar& out);

// univariate polynomial over Scalar, coefficients low to high
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
    UPoly(const Scalar& s) : c_{s} { trim(); }
    static UPoly var() { return UPoly({Scalar(0), Scalar(1)}); }
    static UPoly monomial(const Scalar& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Scalar& lead() const { return c_.back(); }
    Scalar coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Scalar(0); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& p, const UPoly& q);
    friend UPoly operator-(const UPoly& p, const UPoly& q);
    friend UPoly operator*(const UPoly& p, const UPoly& q);
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(c_ == o.c_); }

    UPoly scaled(const Scalar& s) const;
    UPoly monic() const;
    UPoly derivative() const;
    UPoly conj() const;
    Scalar eval(const Scalar& t) const;
    UPoly compose(const UPoly& inner) const;
    void divrem(const UPoly& d, UPoly& q, UPoly& r) const;
    long long field() const;
    std::string str(const std::string& v = "t") const;

private:
    std::vector<Scalar> c_;
    void trim();
};

UPoly gcd(UPoly p, UPoly q);
UPoly squarefree_part(const UPoly& p);

// element of K(y) with monic denominator
class RatFunc {
public:
    RatFunc() : num_(), den_(Scalar(1)) {}
    RatFunc(const Scalar& s, std::string var = "y") : num_(s), den_(Scalar(1)), var_(std::move(var)) {}
    RatFunc(UPoly num, UPoly den, std::string var = "y");
    static RatFunc variable(std::string var = "y") { return RatFunc(UPoly::var(), UPoly(Scalar(1)), std::move(var)); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    const std::string& var() const { return var_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, var_); }
    friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // f(g(y))
    RatFunc compose(const RatFunc& g) const;
    Scalar eval(const Scalar& t) const;
    std::string str() const;

private:
    UPoly num_, den_;
    std::string var_ = "y";
    void normalize();
};

}  // namespace cremona
