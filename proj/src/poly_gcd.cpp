#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "cremona/detail/modp.hpp"
#include "cremona/poly.hpp"

namespace cremona {

using namespace detail;

std::optional<HomPoly> divide_exact(const HomPoly& p, const HomPoly& g) {
    if (g.is_zero()) throw Error("DivisionByZero", "division by the zero polynomial");
    int qd = p.degree() - g.degree();
    if (p.is_zero()) return HomPoly(std::max(qd, 0));
    if (qd < 0) return std::nullopt;
    Scalar ginv = g.lead().inverse();
    Key gl = g.terms()[0].first;
    if (g.is_monomial()) {
        std::vector<Term> out;
        out.reserve(p.size());
        for (auto& t : p.terms()) {
            if (ex(t.first) < ex(gl) || ey(t.first) < ey(gl) || ez(t.first) < ez(gl)) return std::nullopt;
            out.push_back({t.first - gl, t.second * ginv});
        }
        return HomPoly::from_terms(qd, std::move(out));
    }
    std::map<Key, Scalar, std::greater<Key>> r;
    for (auto& t : p.terms()) r.emplace_hint(r.end(), t.first, t.second);
    std::vector<Term> q;
    Scalar tmp;
    while (!r.empty()) {
        auto it = r.begin();
        Key k = it->first;
        if (ex(k) < ex(gl) || ey(k) < ey(gl) || ez(k) < ez(gl)) return std::nullopt;
        Key qk = k - gl;
        Scalar qc = it->second * ginv;
        r.erase(it);
        for (std::size_t i = 1; i < g.size(); ++i) {
            const Term& gt = g.terms()[i];
            tmp = qc;
            tmp *= gt.second;
            auto [jt, fresh] = r.try_emplace(qk + gt.first, -tmp);
            if (!fresh) {
                jt->second -= tmp;
                if (jt->second.is_zero()) r.erase(jt);
            }
        }
        q.push_back({qk, std::move(qc)});
    }
    return HomPoly::from_terms(qd, std::move(q));
}

void divrem(const HomPoly& p, const HomPoly& g, HomPoly& q, HomPoly& rem) {
    if (g.is_zero()) throw Error("DivisionByZero", "division by the zero polynomial");
    int qd = std::max(p.degree() - g.degree(), 0);
    std::map<Key, Scalar, std::greater<Key>> r;
    for (auto& t : p.terms()) r.emplace_hint(r.end(), t.first, t.second);
    std::vector<Term> qt, rt;
    Key gl = g.terms()[0].first;
    Scalar ginv = g.lead().inverse();
    while (!r.empty()) {
        auto it = r.begin();
        Key k = it->first;
        if (p.degree() < g.degree() || ex(k) < ex(gl) || ey(k) < ey(gl) || ez(k) < ez(gl)) {
            rt.push_back(*it);
            r.erase(it);
            continue;
        }
        Key qk = k - gl;
        Scalar qc = it->second * ginv;
        r.erase(it);
        for (std::size_t i = 1; i < g.size(); ++i) {
            const Term& gt = g.terms()[i];
            Scalar tmp = qc * gt.second;
            auto [jt, fresh] = r.try_emplace(qk + gt.first, -tmp);
            if (!fresh) {
                jt->second -= tmp;
                if (jt->second.is_zero()) r.erase(jt);
            }
        }
        qt.push_back({qk, std::move(qc)});
    }
    q = HomPoly::from_terms(qd, std::move(qt));
    rem = HomPoly::from_terms(p.degree(), std::move(rt));
}

namespace {

// new coordinates (x,y,z): X[perm0] = x, X[perm1] = y + r*x, X[perm2] = z + s*x
struct Chart {
    int perm[3] = {0, 1, 2};
    long r = 0, s = 0;
    bool plain() const { return r == 0 && s == 0; }
};

struct Reduced {
    std::vector<std::array<unsigned, 3>> e;  // original exponents
    std::vector<u64> c;
    int deg = 0;
};

bool reduce(const HomPoly& P, u64 p, u64 sq, Reduced& out) {
    out.e.clear();
    out.c.clear();
    out.deg = P.degree();
    for (auto& [k, v] : P.terms()) {
        u64 c;
        if (!scalar_mod(v, p, sq, c)) return false;
        if (c == 0) continue;
        out.e.push_back({ex(k), ey(k), ez(k)});
        out.c.push_back(c);
    }
    return true;
}

u64 eval_mod(const Reduced& R, const u64 X[3], u64 p, std::vector<u64> pw[3]) {
    for (int v = 0; v < 3; ++v) {
        pw[v].resize(R.deg + 1);
        pw[v][0] = 1;
        for (int i = 1; i <= R.deg; ++i) pw[v][i] = mulmod(pw[v][i - 1], X[v], p);
    }
    u64 s = 0;
    for (std::size_t t = 0; t < R.c.size(); ++t)
        s = addmod(s, mulmod(R.c[t], mulmod(pw[0][R.e[t][0]], mulmod(pw[1][R.e[t][1]], pw[2][R.e[t][2]], p), p), p), p);
    return s;
}

// R in chart coordinates at (x, a, 1) as a polynomial in x
ModPoly univariate(const Reduced& R, const Chart& ch, u64 a, u64 p) {
    std::vector<u64> pw[3];
    if (ch.plain()) {
        ModPoly u(R.deg + 1, 0);
        std::vector<u64> apw(R.deg + 1, 1);
        for (int i = 1; i <= R.deg; ++i) apw[i] = mulmod(apw[i - 1], a, p);
        for (std::size_t t = 0; t < R.c.size(); ++t) {
            unsigned i = R.e[t][ch.perm[0]], j = R.e[t][ch.perm[1]];
            u[i] = addmod(u[i], mulmod(R.c[t], apw[j], p), p);
        }
        mp_trim(u);
        return u;
    }
    u64 rm = ch.r >= 0 ? u64(ch.r) % p : p - u64(-ch.r) % p;
    u64 sm = ch.s >= 0 ? u64(ch.s) % p : p - u64(-ch.s) % p;
    std::vector<u64> xs, ys;
    for (int k = 0; k <= R.deg; ++k) {
        u64 x = u64(k);
        u64 X[3];
        X[ch.perm[0]] = x;
        X[ch.perm[1]] = addmod(a, mulmod(rm, x, p), p);
        X[ch.perm[2]] = addmod(1, mulmod(sm, x, p), p);
        xs.push_back(x);
        ys.push_back(eval_mod(R, X, p, pw));
    }
    return mp_interpolate(xs, ys, p);
}

Chart choose_chart(const std::vector<HomPoly>& F, std::size_t& pick) {
    for (std::size_t i = 0; i < F.size(); ++i)
        for (int v = 0; v < 3; ++v) {
            unsigned e[3] = {0, 0, 0};
            e[v] = unsigned(F[i].degree());
            if (!F[i].coeff(e[0], e[1], e[2]).is_zero()) {
                Chart ch;
                ch.perm[0] = v;
                int k = 1;
                for (int w = 0; w < 3; ++w)
                    if (w != v) ch.perm[k++] = w;
                pick = i;
                return ch;
            }
        }
    for (long r = 1; r < 50; ++r)
        for (long s = 1; s <= r; ++s)
            for (std::size_t i = 0; i < F.size(); ++i) {
                if (!F[i].eval({Scalar(1), Scalar(r), Scalar(s)}).is_zero()) {
                    Chart ch;
                    ch.r = r;
                    ch.s = s;
                    pick = i;
                    return ch;
                }
            }
    throw Error("ResourceLimit", "no chart found for gcd");
}

struct PrimeImage {
    int e = -1;
    std::vector<ModPoly> coef;  // coef[i] = coefficient of x^i as polynomial in y
};

// gcd image for one embedding; false on bad prime
bool prime_gcd(const std::vector<Reduced>& R, std::size_t pick, const Chart& ch, u64 p, std::mt19937_64& rng,
               PrimeImage& out) {
    int nP = R[pick].deg;
    int emin = 1 << 30;
    std::vector<u64> nodes;
    std::vector<ModPoly> hs;
    for (int tries = 0; tries < 64; ++tries) {
        u64 a = rng() % (p - 1) + 1;
        if (std::find(nodes.begin(), nodes.end(), a) != nodes.end()) continue;
        ModPoly h = univariate(R[pick], ch, a, p);
        if ((int)h.size() != nP + 1) return false;
        for (std::size_t i = 0; i < R.size() && h.size() > 1; ++i) {
            if (i == pick) continue;
            h = mp_gcd(h, univariate(R[i], ch, a, p), p);
        }
        h = mp_monic(h, p);
        int e = int(h.size()) - 1;
        if (e == 0) {
            out.e = 0;
            out.coef = {ModPoly{1}};
            return true;
        }
        if (e < emin) {
            emin = e;
            nodes.clear();
            hs.clear();
        }
        if (e == emin) {
            nodes.push_back(a);
            hs.push_back(std::move(h));
        }
        if ((int)nodes.size() == emin + 1) break;
    }
    if ((int)nodes.size() != emin + 1) return false;
    out.e = emin;
    out.coef.assign(emin + 1, {});
    std::vector<u64> ys(nodes.size());
    for (int i = 0; i <= emin; ++i) {
        for (std::size_t k = 0; k < nodes.size(); ++k) ys[k] = hs[k][i];
        out.coef[i] = mp_interpolate(nodes, ys, p);
        if ((int)out.coef[i].size() - 1 > emin - i) return false;
    }
    return true;
}

u64 coef_at(const PrimeImage& im, int i, int j) {
    const ModPoly& c = im.coef[i];
    return j < (int)c.size() ? c[j] : 0;
}

void crt_step(Integer& acc, const Integer& M, u64 mmod_p_inv, u64 r, u64 p) {
    u64 a = mpz_fdiv_ui(acc.get_mpz_t(), (unsigned long)p);
    u64 t = mulmod(submod(r, a, p), mmod_p_inv, p);
    acc += M * Integer((unsigned long)t);
}

HomPoly from_chart(const std::vector<Scalar>& cand, int e, const Chart& ch) {
    std::vector<Term> terms;
    for (int i = 0; i <= e; ++i)
        for (int j = 0; i + j <= e; ++j) {
            const Scalar& c = cand[i * (e + 1) + j];
            if (!c.is_zero()) terms.push_back({pack(i, j, e - i - j), c});
        }
    HomPoly gt = HomPoly::from_terms(e, std::move(terms));
    std::array<HomPoly, 3> back;
    HomPoly X0 = HomPoly::var(ch.perm[0]);
    back[0] = X0;
    back[1] = HomPoly::var(ch.perm[1]) - X0.scaled(Scalar(ch.r));
    back[2] = HomPoly::var(ch.perm[2]) - X0.scaled(Scalar(ch.s));
    return gt.substitute(back).monic();
}

// inputs have no common monomial factor and none is a monomial
HomPoly modular_gcd(const std::vector<HomPoly>& F, long long d, std::vector<HomPoly>& cof) {
    std::size_t pick = 0;
    Chart ch = choose_chart(F, pick);
    std::mt19937_64 rng(0x5eed);
    int e = -1;
    Integer M = 1;
    std::vector<Integer> A, B;
    std::vector<Scalar> prev;
    std::vector<Reduced> Rp(F.size()), Rm(F.size());
    const std::size_t kMaxPrimes = 4000;
    for (std::size_t pi = 0; pi < kMaxPrimes; ++pi) {
        u64 p = big_prime(pi);
        u64 s = 0;
        if (d != 0) {
            u64 dm = d > 0 ? u64(d) % p : p - u64(-d) % p;
            if (dm == 0 || !sqrt_mod(dm, p, s)) continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < F.size() && ok; ++i) ok = reduce(F[i], p, s, Rp[i]);
        if (d != 0)
            for (std::size_t i = 0; i < F.size() && ok; ++i) ok = reduce(F[i], p, p - s, Rm[i]);
        if (!ok) continue;
        PrimeImage ip, im;
        if (!prime_gcd(Rp, pick, ch, p, rng, ip)) continue;
        if (ip.e == 0) {
            cof = F;
            return HomPoly::constant(Scalar(1));
        }
        if (d != 0) {
            if (!prime_gcd(Rm, pick, ch, p, rng, im)) continue;
            if (im.e == 0) {
                cof = F;
                return HomPoly::constant(Scalar(1));
            }
            if (im.e != ip.e) continue;
        }
        if (e >= 0 && ip.e > e) continue;
        std::size_t n = std::size_t(ip.e + 1) * std::size_t(ip.e + 1);
        if (e < 0 || ip.e < e) {
            e = ip.e;
            M = 1;
            A.assign(n, Integer(0));
            B.assign(n, Integer(0));
            prev.clear();
        }
        u64 minv = invmod(mpz_fdiv_ui(M.get_mpz_t(), (unsigned long)p), p);
        u64 inv2 = invmod(2, p), inv2s = d != 0 ? invmod(mulmod(2, s, p), p) : 0;
        for (int i = 0; i <= e; ++i)
            for (int j = 0; i + j <= e; ++j) {
                std::size_t idx = std::size_t(i) * (e + 1) + j;
                u64 cp = coef_at(ip, i, j);
                if (d == 0) {
                    crt_step(A[idx], M, minv, cp, p);
                } else {
                    u64 cm = coef_at(im, i, j);
                    crt_step(A[idx], M, minv, mulmod(addmod(cp, cm, p), inv2, p), p);
                    crt_step(B[idx], M, minv, mulmod(submod(cp, cm, p), inv2s, p), p);
                }
            }
        M *= Integer((unsigned long)p);
        std::vector<Scalar> cand(n, Scalar(0));
        bool rec = true;
        for (int i = 0; i <= e && rec; ++i)
            for (int j = 0; i + j <= e && rec; ++j) {
                std::size_t idx = std::size_t(i) * (e + 1) + j;
                Rational qa, qb = 0;
                rec = rational_reconstruct(A[idx], M, qa);
                if (rec && d != 0) rec = rational_reconstruct(B[idx], M, qb);
                if (rec) cand[idx] = d != 0 ? Scalar(qa, qb, Rational((long)d)) : Scalar(qa);
            }
        if (!rec) {
            prev.clear();
            continue;
        }
        if (cand != prev) {
            prev = std::move(cand);
            continue;
        }
        HomPoly G = from_chart(cand, e, ch);
        std::vector<HomPoly> qs;
        bool all = true;
        for (auto& f : F) {
            auto q = divide_exact(f, G);
            if (!q) {
                all = false;
                break;
            }
            qs.push_back(std::move(*q));
        }
        if (all) {
            cof = std::move(qs);
            return G;
        }
    }
    throw Error("ResourceLimit", "modular gcd did not stabilize");
}

}  // namespace

GcdResult gcd_cofactors(const std::vector<HomPoly>& ps) {
    std::vector<std::size_t> idx;
    long long d = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].is_zero()) continue;
        idx.push_back(i);
        d = merge_field(d, ps[i].field());
    }
    if (idx.empty()) throw Error("ZeroMap", "gcd of zero polynomials");
    std::array<unsigned, 3> mn = ps[idx[0]].min_exponents();
    for (auto i : idx) {
        auto m = ps[i].min_exponents();
        for (int v = 0; v < 3; ++v) mn[v] = std::min(mn[v], m[v]);
    }
    std::vector<HomPoly> F;
    bool trivial = false;
    for (auto i : idx) {
        F.push_back(ps[i].divide_monomial(mn[0], mn[1], mn[2]));
        if (F.back().is_monomial()) trivial = true;
    }
    GcdResult res;
    HomPoly G;
    std::vector<HomPoly> cof;
    if (F.size() == 1) {
        G = F[0].monic();
        cof = {HomPoly::constant(F[0].lead())};
    } else if (trivial) {
        G = HomPoly::constant(Scalar(1));
        cof = F;
    } else {
        G = modular_gcd(F, d, cof);
    }
    res.g = HomPoly::monomial(Scalar(1), mn[0], mn[1], mn[2]) * G;
    res.cofactors.resize(ps.size());
    for (std::size_t k = 0; k < idx.size(); ++k) res.cofactors[idx[k]] = std::move(cof[k]);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].is_zero()) res.cofactors[i] = HomPoly(std::max(0, ps[i].degree() - res.g.degree()));
    return res;
}

HomPoly poly_gcd(const std::vector<HomPoly>& ps) { return gcd_cofactors(ps).g; }
HomPoly poly_gcd(const HomPoly& p, const HomPoly& q) { return gcd_cofactors({p, q}).g; }

}  // namespace cremona
