#pragma once

#include <string>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// integer polynomial, coefficients low to high
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
    IntPoly(std::initializer_list<long> c);
    static IntPoly monomial(long c, int k);
    static IntPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Integer coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Integer(0); }
    const Integer& lead() const { return c_.back(); }
    const std::vector<Integer>& coeffs() const { return c_; }

    friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(c_ == o.c_); }

    IntPoly pow(unsigned e) const;
    // exact division; false when the quotient is not integral or the remainder is nonzero
    bool divide_exact(const IntPoly& d, IntPoly& q) const;
    // p(-t)
    IntPoly negated_var() const;
    Integer eval(const Integer& t) const;
    std::vector<double> as_doubles() const;
    std::string str(const std::string& v = "t") const;

private:
    std::vector<Integer> c_;
    void trim();
};

IntPoly cyclotomic(int n);

}  // namespace cremona
