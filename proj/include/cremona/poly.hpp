#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// packed exponent triple, 21 bits each; numeric order is lex x > y > z
using Key = std::uint64_t;
constexpr unsigned kExpBits = 21;
constexpr Key kExpMask = (Key(1) << kExpBits) - 1;
inline Key pack(Key i, Key j, Key k) { return (i << (2 * kExpBits)) | (j << kExpBits) | k; }
inline unsigned ex(Key k) { return unsigned(k >> (2 * kExpBits)); }
inline unsigned ey(Key k) { return unsigned((k >> kExpBits) & kExpMask); }
inline unsigned ez(Key k) { return unsigned(k & kExpMask); }

using Term = std::pair<Key, Scalar>;

// homogeneous ternary form; terms sorted by decreasing key, coefficients nonzero
class HomPoly {
public:
    explicit HomPoly(int degree = 0) : deg_(degree) {}
    static HomPoly var(int v);  // 0,1,2 -> x,y,z
    static HomPoly constant(const Scalar& c);
    static HomPoly monomial(const Scalar& c, unsigned i, unsigned j, unsigned k);
    // merges duplicates, drops zeros; throws DegreeMismatch on mixed degrees
    static HomPoly from_terms(int degree, std::vector<Term> terms);

    int degree() const { return deg_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    Scalar coeff(unsigned i, unsigned j, unsigned k) const;
    const Scalar& lead() const { return t_.front().second; }
    bool is_monomial() const { return t_.size() == 1; }

    HomPoly operator-() const;
    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const Scalar& s, const HomPoly& p) { return p.scaled(s); }
    bool operator==(const HomPoly& o) const { return deg_ == o.deg_ && t_ == o.t_; }
    bool operator!=(const HomPoly& o) const { return !(*this == o); }

    HomPoly scaled(const Scalar& s) const;
    HomPoly pow(unsigned long e) const;
    HomPoly monic() const;
    HomPoly diff(int v) const;
    HomPoly substitute(const std::array<HomPoly, 3>& images) const;
    Scalar eval(const std::array<Scalar, 3>& p) const;
    ComplexF eval_complex(const std::array<ComplexF, 3>& p) const;
    long long field() const;
    std::size_t digits() const;
    // smallest exponent of each variable over all terms
    std::array<unsigned, 3> min_exponents() const;
    HomPoly divide_monomial(unsigned i, unsigned j, unsigned k) const;

    std::string str() const;
    // degree_hint is used for the zero polynomial
    static HomPoly parse(const std::string& s, int degree_hint = -1);

private:
    int deg_;
    std::vector<Term> t_;
    friend class HomPolyBuilder;
};

std::optional<HomPoly> divide_exact(const HomPoly& p, const HomPoly& g);
void divrem(const HomPoly& p, const HomPoly& g, HomPoly& q, HomPoly& r);

struct GcdResult {
    HomPoly g;
    std::vector<HomPoly> cofactors;  // inputs divided by g
};
// monic gcd with exact cofactors; zero inputs are skipped
GcdResult gcd_cofactors(const std::vector<HomPoly>& ps);
HomPoly poly_gcd(const std::vector<HomPoly>& ps);
HomPoly poly_gcd(const HomPoly& p, const HomPoly& q);

HomPoly jacobian_det(const std::array<HomPoly, 3>& f);

class LinearForm {
public:
    LinearForm(const Scalar& a0, const Scalar& a1, const Scalar& a2);
    const std::array<Scalar, 3>& coeffs() const { return c_; }
    const Scalar& operator[](int i) const { return c_[i]; }
    HomPoly poly() const;
    Scalar eval(const std::array<Scalar, 3>& p) const { return c_[0] * p[0] + c_[1] * p[1] + c_[2] * p[2]; }
    bool operator==(const LinearForm& o) const { return c_ == o.c_; }
    std::string str() const { return poly().str(); }
    static LinearForm from_poly(const HomPoly& p);

private:
    std::array<Scalar, 3> c_;
};

// (s,t) -> point of L, written as degree-1 forms in x (=s) and y (=t)
std::array<HomPoly, 3> parametrize_line(const LinearForm& L);

// roots in Q(sqrt d) of p; complete is false when some complex root lies outside the field
struct FieldRoots {
    std::vector<Scalar> roots;  // distinct
    bool complete = true;
};
FieldRoots roots_in_field(const UPoly& p, long long d);

struct LinearFactor {
    LinearForm line;
    int mult;
};
struct LinearSplit {
    std::vector<LinearFactor> factors;
    HomPoly residual;  // no linear factor over the field
};
LinearSplit linear_factors(const HomPoly& c, long long d);
// nullopt is NotFullySplit
std::optional<std::vector<LinearFactor>> factor_linear_cubic(const HomPoly& c, long long d);

// affine bivariate polynomial in x, y
class BiPoly {
public:
    using Exp2 = std::pair<unsigned, unsigned>;
    struct Order {
        bool operator()(const Exp2& a, const Exp2& b) const {
            unsigned da = a.first + a.second, db = b.first + b.second;
            if (da != db) return da > db;
            return a > b;
        }
    };
    using Map = std::map<Exp2, Scalar, Order>;

    BiPoly() = default;
    BiPoly(const Scalar& c);
    static BiPoly x();
    static BiPoly y();
    static BiPoly monomial(const Scalar& c, unsigned i, unsigned j);
    static BiPoly from_upoly_y(const UPoly& p);

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;
    int degree_x() const;
    int degree_y() const;
    Scalar coeff(unsigned i, unsigned j) const;
    BiPoly top() const;  // homogeneous part of top degree

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    bool operator==(const BiPoly& o) const { return t_ == o.t_; }
    bool operator!=(const BiPoly& o) const { return !(t_ == o.t_); }

    BiPoly scaled(const Scalar& s) const;
    BiPoly pow(unsigned e) const;
    BiPoly diff(int v) const;
    BiPoly compose(const BiPoly& fx, const BiPoly& fy) const;
    Scalar eval(const Scalar& x, const Scalar& y) const;
    bool depends_on_x() const;
    // as polynomial in y when independent of x
    UPoly as_upoly_y() const;
    HomPoly homogenize(int degree) const;
    static BiPoly dehomogenize(const HomPoly& p);

    std::string str() const;
    static BiPoly parse(const std::string& s);

private:
    Map t_;
    void add_term(const Exp2& e, const Scalar& c);
};

}  // namespace cremona
