#include "cremona/detail/expr.hpp"

#include <cctype>

namespace cremona::detail {

namespace {

GenPoly gp_add(const GenPoly& a, const GenPoly& b, bool neg) {
    GenPoly r = a;
    for (auto& [e, c] : b) {
        Scalar& s = r[e];
        if (neg) s -= c;
        else s += c;
        if (s.is_zero()) r.erase(e);
    }
    return r;
}

GenPoly gp_mul(const GenPoly& a, const GenPoly& b) {
    GenPoly r;
    for (auto& [e1, c1] : a)
        for (auto& [e2, c2] : b) {
            Exp3 e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            Scalar& s = r[e];
            s += c1 * c2;
            if (s.is_zero()) r.erase(e);
        }
    return r;
}

GenPoly gp_const(const Scalar& s) {
    GenPoly r;
    if (!s.is_zero()) r[{0, 0, 0}] = s;
    return r;
}

bool gp_is_const(const GenPoly& p, Scalar& out) {
    if (p.empty()) {
        out = Scalar(0);
        return true;
    }
    if (p.size() == 1 && p.begin()->first == Exp3{0, 0, 0}) {
        out = p.begin()->second;
        return true;
    }
    return false;
}

struct Parser {
    const std::string& s;
    const std::vector<std::string>& vars;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& m) {
        throw Error("ParseError", m + " at offset " + std::to_string(i) + " in '" + s + "'");
    }
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
    GenPoly expr() {
        GenPoly v = term();
        for (;;) {
            if (eat('+')) v = gp_add(v, term(), false);
            else if (eat('-')) v = gp_add(v, term(), true);
            else return v;
        }
    }
    GenPoly term() {
        GenPoly v = unary();
        for (;;) {
            if (eat('*')) v = gp_mul(v, unary());
            else if (eat('/')) {
                GenPoly d = unary();
                Scalar c;
                if (!gp_is_const(d, c)) fail("division by a non-constant");
                if (c.is_zero()) throw Error("DivisionByZero", "in '" + s + "'");
                v = gp_mul(v, gp_const(c.inverse()));
            } else {
                ws();
                if (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '(' || s[i] == '_'))
                    fail("implicit multiplication");
                return v;
            }
        }
    }
    GenPoly unary() {
        if (eat('-')) return gp_add(GenPoly{}, unary(), true);
        if (eat('+')) return unary();
        return power();
    }
    GenPoly power() {
        GenPoly b = atom();
        if (eat('^')) {
            ws();
            std::size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            if (j == i) fail("exponent must be a nonnegative integer");
            unsigned long e = std::stoul(s.substr(i, j - i));
            i = j;
            GenPoly r = gp_const(Scalar(1));
            GenPoly base = b;
            while (e) {
                if (e & 1) r = gp_mul(r, base);
                e >>= 1;
                if (e) base = gp_mul(base, base);
            }
            return r;
        }
        return b;
    }
    GenPoly atom() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        if (eat('(')) {
            GenPoly v = expr();
            if (!eat(')')) fail("missing )");
            return v;
        }
        if (std::isdigit((unsigned char)s[i])) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            Rational q(Integer(s.substr(i, j - i)));
            if (j < s.size() && s[j] == '.') {
                std::size_t k = j + 1;
                while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
                std::string frac = s.substr(j + 1, k - j - 1);
                if (!frac.empty()) {
                    Integer den;
                    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
                    q += Rational(Integer(frac), den);
                }
                j = k;
            }
            q.canonicalize();
            i = j;
            return gp_const(Scalar(q));
        }
        std::size_t j = i;
        while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
        if (j == i) fail("unexpected character");
        std::string name = s.substr(i, j - i);
        i = j;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            if (vars[v] == name) {
                Exp3 e{0, 0, 0};
                e[v] = 1;
                return GenPoly{{e, Scalar(1)}};
            }
        }
        if (name == "i") return gp_const(Scalar::sqrt_of(Rational(-1)));
        if (name == "sqrt") {
            if (!eat('(')) fail("sqrt needs (");
            GenPoly a = expr();
            if (!eat(')')) fail("missing )");
            Scalar c;
            if (!gp_is_const(a, c) || !c.is_rational()) fail("sqrt of a non-rational");
            return gp_const(Scalar::sqrt_of(c.a()));
        }
        fail("unknown name '" + name + "'");
    }
};

}  // namespace

GenPoly parse_gen(const std::string& s, const std::vector<std::string>& vars) {
    Parser p{s, vars};
    GenPoly g = p.expr();
    p.ws();
    if (p.i != s.size()) p.fail("trailing input");
    return g;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else cur += c;
    }
    out.push_back(cur);
    return out;
}

}  // namespace cremona::detail

namespace cremona {

Scalar Scalar::parse(const std::string& s) {
    auto g = detail::parse_gen(s, {});
    if (g.empty()) return Scalar(0);
    if (g.size() != 1 || g.begin()->first != detail::Exp3{0, 0, 0}) throw Error("ParseError", "not a constant: " + s);
    return g.begin()->second;
}

}  // namespace cremona
