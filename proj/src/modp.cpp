#include "cremona/detail/modp.hpp"

#include <mutex>

namespace cremona::detail {

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

u64 big_prime(std::size_t k) {
    static std::vector<u64> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    u64 c = cache.empty() ? (1ull << 62) - 1 : cache.back() - 2;
    while (cache.size() <= k) {
        if (c % 2 == 0) --c;
        while (!is_prime(c)) c -= 2;
        cache.push_back(c);
        c -= 2;
    }
    return cache[k];
}

bool sqrt_mod(u64 a, u64 p, u64& r) {
    a %= p;
    if (a == 0) {
        r = 0;
        return true;
    }
    if (powmod(a, (p - 1) / 2, p) != 1) return false;
    // Tonelli-Shanks
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), x = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        x = mulmod(x, b, p);
    }
    r = x;
    return true;
}

static u64 mpz_mod_u64(const Integer& z, u64 p) {
    static_assert(sizeof(unsigned long) == sizeof(u64));
    return mpz_fdiv_ui(z.get_mpz_t(), (unsigned long)p);
}

bool rat_mod(const Rational& q, u64 p, u64& out) {
    u64 d = mpz_mod_u64(q.get_den(), p);
    if (d == 0) return false;
    out = mulmod(mpz_mod_u64(q.get_num(), p), invmod(d, p), p);
    return true;
}

bool scalar_mod(const Scalar& x, u64 p, u64 s, u64& out) {
    u64 a;
    if (!rat_mod(x.a(), p, a)) return false;
    if (x.d() == 0) {
        out = a;
        return true;
    }
    u64 b;
    if (!rat_mod(x.b(), p, b)) return false;
    out = addmod(a, mulmod(b, s, p), p);
    return true;
}

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    mp_trim(r);
    return r;
}

void mp_divrem(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& q, ModPoly& r) {
    r = a;
    mp_trim(r);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    u64 inv = invmod(b.back(), p);
    long bs = (long)b.size() - 1;
    for (long i = (long)r.size() - 1; i >= bs; --i) {
        u64 f = mulmod(r[i], inv, p);
        q[i - bs] = f;
        if (f == 0) continue;
        for (long j = 0; j <= bs; ++j) r[i - bs + j] = submod(r[i - bs + j], mulmod(f, b[j], p), p);
    }
    mp_trim(r);
    mp_trim(q);
}

ModPoly mp_monic(const ModPoly& a, u64 p) {
    if (a.empty()) return a;
    u64 inv = invmod(a.back(), p);
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], inv, p);
    return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        ModPoly q, r;
        mp_divrem(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

u64 mp_eval(const ModPoly& a, u64 x, u64 p) {
    u64 r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = addmod(mulmod(r, x, p), a[i], p);
    return r;
}

ModPoly mp_interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
    // Newton divided differences
    std::size_t n = xs.size();
    std::vector<u64> c = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            c[i] = mulmod(submod(c[i], c[i - 1], p), invmod(submod(xs[i], xs[i - j], p), p), p);
            if (i == j) break;
        }
    ModPoly r{c[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // r = r*(x - xs[k]) + c[k]
        ModPoly nr(r.size() + 1, 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            nr[i + 1] = addmod(nr[i + 1], r[i], p);
            nr[i] = submod(nr[i], mulmod(r[i], xs[k], p), p);
        }
        nr[0] = addmod(nr[0], c[k], p);
        r = std::move(nr);
    }
    mp_trim(r);
    return r;
}

bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
    // find r/s with r = s*a mod m, |r|,|s| <= sqrt(m/2)
    Integer bound;
    Integer half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Integer r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Integer s0 = 0, s1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (abs(s1) > bound || s1 == 0) return false;
    out = Rational(r1, s1);
    out.canonicalize();
    Integer g;
    mpz_gcd(g.get_mpz_t(), s1.get_mpz_t(), m.get_mpz_t());
    return g == 1;
}

}  // namespace cremona::detail
