#include "cremona/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace cremona {

IntPoly::IntPoly(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(long c, int k) {
    std::vector<Integer> v(k + 1, Integer(0));
    v[k] = c;
    return IntPoly(v);
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<Integer> c(std::max(p.c_.size(), q.c_.size()), Integer(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
    return IntPoly(c);
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) { return p + (-q); }

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return IntPoly();
    std::vector<Integer> c(p.c_.size() + q.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return IntPoly(c);
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r{1}, b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool IntPoly::divide_exact(const IntPoly& d, IntPoly& q) const {
    if (d.is_zero()) throw Error("DivisionByZero", "IntPoly division by 0");
    if (is_zero()) {
        q = IntPoly();
        return true;
    }
    if (degree() < d.degree()) return false;
    std::vector<Integer> r = c_;
    std::vector<Integer> qc(degree() - d.degree() + 1, Integer(0));
    for (int i = degree(); i >= d.degree(); --i) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), d.lead().get_mpz_t())) return false;
        Integer f = r[i] / d.lead();
        qc[i - d.degree()] = f;
        for (int j = 0; j <= d.degree(); ++j) r[i - d.degree() + j] -= f * d.c_[j];
    }
    for (auto& v : r)
        if (v != 0) return false;
    q = IntPoly(qc);
    return true;
}

IntPoly IntPoly::negated_var() const {
    IntPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

Integer IntPoly::eval(const Integer& t) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

std::vector<double> IntPoly::as_doubles() const {
    std::vector<double> v;
    for (auto& c : c_) v.push_back(c.get_d());
    return v;
}

std::string IntPoly::str(const std::string& v) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Integer c = c_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (i == 0) os << c.get_str();
        else {
            if (c != 1) os << c.get_str() << "*";
            os << v;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly cyclotomic(int n) {
    static std::map<int, IntPoly> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPoly p = IntPoly::monomial(1, n) - IntPoly{1};
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        IntPoly q;
        p.divide_exact(cyclotomic(d), q);
        p = q;
    }
    cache[n] = p;
    return p;
}

}  // namespace cremona
