#include "cremona/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cremona/detail/modp.hpp"

namespace cremona {

using namespace detail;

namespace {

struct ModForm {
    std::vector<std::array<unsigned, 3>> e;
    std::vector<u64> c;
};

bool reduce_form(const HomPoly& P, u64 p, u64 s, ModForm& out) {
    for (auto& [k, v] : P.terms()) {
        u64 c;
        if (!scalar_mod(v, p, s, c)) return false;
        if (c == 0) continue;
        out.e.push_back({ex(k), ey(k), ez(k)});
        out.c.push_back(c);
    }
    return true;
}

bool pick_prime(long long d, std::size_t& idx, u64& p, u64& s) {
    for (std::size_t tries = 0; tries < 200; ++tries, ++idx) {
        p = big_prime(idx);
        s = 0;
        if (d == 0) return true;
        u64 dm = d > 0 ? u64(d) % p : p - u64(-d) % p;
        if (dm != 0 && sqrt_mod(dm, p, s)) return true;
    }
    return false;
}

std::vector<long> probe_once(const RatMap& f, int N, std::uint64_t seed, std::size_t prime_idx) {
    long long d = f.field();
    std::mt19937_64 rng(seed);
    u64 p = 0, s = 0;
    std::array<ModForm, 3> F;
    while (true) {
        if (!pick_prime(d, prime_idx, p, s)) throw Error("ResourceLimit", "no usable prime");
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            F[i] = ModForm();
            ok = reduce_form(f[i], p, s, F[i]);
        }
        if (ok) break;
        ++prime_idx;
    }
    // h_i(s, 1) with total degree n
    std::array<ModPoly, 3> h;
    for (auto& x : h) {
        x = {rng() % p, rng() % p};
        mp_trim(x);
    }
    long n = 1;
    std::vector<long> out;
    int nu = f.degree();
    for (int k = 1; k <= N; ++k) {
        std::array<std::vector<ModPoly>, 3> pw;
        for (int v = 0; v < 3; ++v) {
            pw[v].push_back({1});
            for (int e = 1; e <= nu; ++e) pw[v].push_back(mp_mul(pw[v].back(), h[v], p));
        }
        std::array<ModPoly, 3> g;
        for (int i = 0; i < 3; ++i) {
            ModPoly acc;
            for (std::size_t t = 0; t < F[i].c.size(); ++t) {
                auto& e = F[i].e[t];
                ModPoly term = mp_mul(mp_mul(pw[0][e[0]], pw[1][e[1]], p), pw[2][e[2]], p);
                if (acc.size() < term.size()) acc.resize(term.size(), 0);
                for (std::size_t j = 0; j < term.size(); ++j) acc[j] = addmod(acc[j], mulmod(term[j], F[i].c[t], p), p);
            }
            mp_trim(acc);
            g[i] = std::move(acc);
        }
        long nn = n * nu;
        long tmult = nn;
        ModPoly G;
        for (int i = 0; i < 3; ++i) {
            if (g[i].empty()) continue;
            tmult = std::min<long>(tmult, nn - (long(g[i].size()) - 1));
            G = G.empty() ? g[i] : mp_gcd(G, g[i], p);
        }
        if (G.empty()) throw Error("ZeroMap", "iterate vanishes on the probe line");
        G = mp_monic(G, p);
        for (int i = 0; i < 3; ++i) {
            if (g[i].empty()) {
                h[i].clear();
                continue;
            }
            ModPoly q, r;
            mp_divrem(g[i], G, p, q, r);
            h[i] = std::move(q);
        }
        n = nn - tmult - (long(G.size()) - 1);
        out.push_back(n);
    }
    return out;
}

// smallest period of the tail, 0 when none
int detect_period(const std::vector<long>& d) {
    int N = int(d.size());
    if (N < 2) return 0;
    long head = *std::max_element(d.begin(), d.begin() + (N + 1) / 2);
    long all = *std::max_element(d.begin(), d.end());
    if (all > head) return 0;
    for (int P = 1; P <= N / 2; ++P) {
        bool ok = true;
        for (int k = 0; k + P < N && ok; ++k) ok = d[k] == d[k + P];
        if (ok) return P;
    }
    return 0;
}

}  // namespace

std::vector<long> probe_degrees(const RatMap& f, int N, std::uint64_t seed) {
    auto a = probe_once(f, N, seed * 0x9e3779b97f4a7c15ull + 1, std::size_t(seed % 17) * 3 + 5);
    auto b = probe_once(f, N, seed * 0x9e3779b97f4a7c15ull + 2, std::size_t(seed % 17) * 3 + 31);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::max(a[i], b[i]);
    return a;
}

DegreeSequence degree_sequence(const RatMap& f, int N, const DynConfig& cfg) {
    if (N < 1) throw Error("BadArgument", "horizon must be positive");
    DegreeSequence s;
    s.horizon = N;
    s.method = "exact";
    if (cfg.mode != DegreeMode::Probe) {
        RatMap g = f;
        s.degrees.push_back(f.degree());
        s.exact_upto = 1;
        if (g.is_identity()) s.period = 1;
        for (int k = 2; k <= N; ++k) {
            if (s.period) {
                s.degrees.push_back(s.degrees[(k - 1) % s.period]);
                s.exact_upto = k;
                continue;
            }
            double per = double(g.terms()) / 3.0;
            double D = double(f.degree()) * double(g.degree());
            double out = std::min(std::pow(per, double(f.degree())), (D + 1) * (D + 2) / 2);
            double work = double(f.terms()) * std::max(out, per) * per * (1.0 + double(g.digits()) / double(g.terms()));
            bool over = g.digits() > cfg.budget_digits || work > cfg.budget_work;
            if (!over) {
                try {
                    g = compose(f, g);
                } catch (const Error& e) {
                    if (e.code() != "ResourceLimit") throw;
                    over = true;
                }
            }
            if (over) {
                if (cfg.mode == DegreeMode::Exact)
                    throw Error("ResourceLimit", "iterate " + std::to_string(k) + " exceeds the coefficient budget");
                break;
            }
            s.degrees.push_back(g.degree());
            s.exact_upto = k;
            if (g.is_identity()) s.period = k;
        }
    }
    // long tail: an algebraically stable map has degrees d^k
    if ((int)s.degrees.size() < N && cfg.mode == DegreeMode::Auto && s.exact_upto > 0) {
        double proj = double(s.degrees.back()) * std::pow(double(f.degree()), N - (int)s.degrees.size());
        if (proj > 4096 && proj < 4e18) {
            try {
                auto fi = inverse(f, f.degree());
                if (fi && stability_probe(f, *fi, N - 2).collisions.empty()) {
                    for (int k = int(s.degrees.size()); k < N; ++k) s.degrees.push_back(s.degrees.back() * f.degree());
                    s.method = "exact+stable";
                }
            } catch (const Error&) {
            }
        }
    }
    if ((int)s.degrees.size() < N) {
        auto pd = probe_degrees(f, N, cfg.seed);
        for (int k = int(s.degrees.size()); k < N; ++k) s.degrees.push_back(pd[k]);
        s.method = s.exact_upto ? "exact+probe" : "probe";
    }
    for (int k = 1; k < N; ++k)
        if (s.degrees[k] > s.degrees[k - 1] * s.degrees[0])
            throw Error("InternalError", "submultiplicativity violated at k=" + std::to_string(k + 1));
    return s;
}

double lambda_estimate(const DegreeSequence& s) {
    int N = int(s.degrees.size());
    if (N == 0) return 1.0;
    if (s.period > 0 || detect_period(s.degrees) > 0) return 1.0;
    if (N == 1) return double(s.degrees[0]);
    double dN = double(s.degrees[N - 1]), dP = double(s.degrees[N - 2]);
    return std::sqrt(std::pow(dN, 1.0 / N) * (dN / dP));
}

std::string growth_name(Growth g) {
    switch (g) {
        case Growth::Bounded: return "Bounded";
        case Growth::Linear: return "Linear";
        case Growth::Quadratic: return "Quadratic";
        case Growth::Exponential: return "Exponential";
        case Growth::Undetermined: return "Undetermined";
    }
    return "?";
}

GrowthClass growth_classify(const DegreeSequence& s, const std::function<bool(int)>& oracle) {
    GrowthClass g;
    const auto& d = s.degrees;
    int N = int(d.size());
    bool periodic = s.period > 0 || detect_period(d) > 0;
    if (!periodic && oracle)
        for (int k = 1; k <= N && !periodic; ++k)
            if (d[k - 1] == 1) periodic = oracle(k);  // f^k = id forces degree 1
    if (periodic) {
        g.label = Growth::Bounded;
        g.lambda = 1.0;
        g.note = s.period ? "f^" + std::to_string(s.period) + " = id" : "degrees periodic";
        return g;
    }
    if (N < 3) {
        g.note = "horizon too short";
        g.lambda = lambda_estimate(s);
        return g;
    }
    // least squares y = a + b*x
    auto fit = [&](const std::vector<double>& x, const std::vector<double>& y, double& a, double& b) {
        double n = double(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            sx += x[i];
            sy += y[i];
            sxx += x[i] * x[i];
            sxy += x[i] * y[i];
        }
        b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        a = (sy - b * sx) / n;
    };
    std::vector<double> k1, k2, y, ly;
    for (int k = 1; k <= N; ++k) {
        k1.push_back(k);
        k2.push_back(double(k) * k);
        y.push_back(double(d[k - 1]));
        ly.push_back(std::log(double(d[k - 1])));
    }
    auto resid = [&](auto model) {
        double s2 = 0;
        for (int k = 1; k <= N; ++k) {
            double r = (y[k - 1] - model(k)) / y[k - 1];
            s2 += r * r;
        }
        return std::sqrt(s2 / N);
    };
    double a, b;
    fit(k1, y, a, b);
    g.residuals[0] = resid([&](int k) { return a + b * k; });
    fit(k2, y, a, b);
    g.residuals[1] = resid([&](int k) { return a + b * double(k) * k; });
    fit(k1, ly, a, b);
    double lam_fit = std::exp(b);
    g.residuals[2] = resid([&](int k) { return std::exp(a + b * k); });
    g.lambda = lambda_estimate(s);
    int order[3] = {0, 1, 2};
    std::sort(order, order + 3, [&](int i, int j) { return g.residuals[i] < g.residuals[j]; });
    double best = g.residuals[order[0]], second = g.residuals[order[1]];
    if (!(best <= (1.0 - kGrowthMargin) * second)) {
        g.label = Growth::Undetermined;
        g.note = "fit residuals within the margin";
        return g;
    }
    const Growth labels[3] = {Growth::Linear, Growth::Quadratic, Growth::Exponential};
    g.label = labels[order[0]];
    if (g.label == Growth::Exponential && !(lam_fit > 1.05 && g.lambda > 1.05)) {
        g.label = Growth::Undetermined;
        g.note = "exponential fit with base near 1";
    }
    return g;
}

// stability

namespace {

struct ModPoint {
    u64 p, s;
    std::array<u64, 3> c;
};

bool point_mod(const ProjPoint& q, u64 p, u64 s, std::array<u64, 3>& out) {
    for (int i = 0; i < 3; ++i)
        if (!scalar_mod(q[i], p, s, out[i])) return false;
    return true;
}

bool proportional(const std::array<u64, 3>& a, const std::array<u64, 3>& b, u64 p) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (mulmod(a[i], b[j], p) != mulmod(a[j], b[i], p)) return false;
    return true;
}

}  // namespace

StabilityReport stability_probe(const RatMap& f, const RatMap& f_inv, int N) {
    if (N < 0) throw Error("BadArgument", "horizon must be nonnegative");
    if (!compose(f, f_inv).is_identity()) throw Error("NotInverse", "supplied inverse does not invert the map");
    StabilityReport rep;
    rep.horizon = N;
    long long d = merge_field(f.field(), f_inv.field());
    PointSet T = common_zeros({f_inv[0], f_inv[1], f_inv[2]}, d);
    PointSet I = common_zeros({f[0], f[1], f[2]}, d);
    if (!T.complete || !I.complete)
        throw Error("FieldObstruction", "indeterminacy points are not rational over the working field");
    rep.targets = T.points;
    rep.ind_points = I.points;
    const std::size_t kExactDigits = 20000;
    for (auto& t : T.points) {
        ProjPoint q = t;
        int k = 0;
        bool done = false;
        for (; k <= N; ++k) {
            for (auto& ip : I.points)
                if (q == ip) {
                    rep.collisions.push_back({t, k, ip});
                    done = true;
                }
            if (done || k == N) break;
            std::size_t dig = q[0].digits() + q[1].digits() + q[2].digits();
            if (dig > kExactDigits) break;
            q = *f.apply(q);
        }
        if (done || k >= N) continue;
        // continue modulo three primes
        std::vector<ModPoint> mq;
        std::vector<std::array<ModForm, 3>> mf;
        std::vector<std::vector<std::array<u64, 3>>> mind;
        std::size_t idx = 60;
        while (mq.size() < 3) {
            u64 p, s;
            if (!pick_prime(d, idx, p, s)) throw Error("ResourceLimit", "no usable prime");
            ++idx;
            ModPoint m{p, s, {}};
            std::array<ModForm, 3> F;
            bool ok = point_mod(q, p, s, m.c);
            for (int i = 0; i < 3 && ok; ++i) ok = reduce_form(f[i], p, s, F[i]);
            std::vector<std::array<u64, 3>> im;
            for (auto& ip : I.points) {
                std::array<u64, 3> c;
                ok = ok && point_mod(ip, p, s, c);
                im.push_back(c);
            }
            if (!ok) continue;
            mq.push_back(m);
            mf.push_back(F);
            mind.push_back(im);
        }
        for (; k < N; ++k) {
            for (std::size_t r = 0; r < mq.size(); ++r) {
                u64 p = mq[r].p;
                std::array<u64, 3> nc;
                for (int i = 0; i < 3; ++i) {
                    u64 acc = 0;
                    for (std::size_t t2 = 0; t2 < mf[r][i].c.size(); ++t2) {
                        auto& e = mf[r][i].e[t2];
                        u64 v = mulmod(mf[r][i].c[t2],
                                       mulmod(powmod(mq[r].c[0], e[0], p),
                                              mulmod(powmod(mq[r].c[1], e[1], p), powmod(mq[r].c[2], e[2], p), p), p),
                                       p);
                        acc = addmod(acc, v, p);
                    }
                    nc[i] = acc;
                }
                mq[r].c = nc;
            }
            for (std::size_t j = 0; j < I.points.size(); ++j) {
                bool all = true;
                for (std::size_t r = 0; r < mq.size() && all; ++r) all = proportional(mq[r].c, mind[r][j], mq[r].p);
                if (all) {
                    rep.collisions.push_back({t, k + 1, I.points[j]});
                    done = true;
                }
            }
            if (done) break;
        }
    }
    rep.summary = rep.collisions.empty() ? "no obstruction up to " + std::to_string(N)
                                         : "not algebraically stable (collision found)";
    return rep;
}

}  // namespace cremona

namespace cremona {

RatMap monomial_map(const std::array<std::array<long, 2>, 2>& B) {
    auto [a, b] = B[0];
    auto [c, d] = B[1];
    if (a * d - b * c == 0) throw Error("NotBirational", "singular exponent matrix");
    std::array<std::array<long, 3>, 3> e = {{{a, b, -a - b}, {c, d, -c - d}, {0, 0, 0}}};
    for (int v = 0; v < 3; ++v) {
        long m = std::min({e[0][v], e[1][v], e[2][v]});
        for (auto& row : e) row[v] -= m;
    }
    std::array<HomPoly, 3> comps;
    for (int i = 0; i < 3; ++i) comps[i] = HomPoly::monomial(Scalar(1), e[i][0], e[i][1], e[i][2]);
    return RatMap(comps);
}

}  // namespace cremona
