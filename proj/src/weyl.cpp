#include "cremona/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "cremona/numerics.hpp"

namespace cremona {

LatticeVec basis_vec(int n, int i) {
    if (i < 0 || i > n) throw Error("DimensionMismatch", "basis index out of range");
    LatticeVec v(n + 1, 0);
    v[i] = 1;
    return v;
}

long long minkowski(const LatticeVec& u, const LatticeVec& v) {
    if (u.size() != v.size() || u.empty()) throw Error("DimensionMismatch", "vectors of different length");
    long long s = u[0] * v[0];
    for (std::size_t i = 1; i < u.size(); ++i) s -= u[i] * v[i];
    return s;
}

LatticeVec reflect(const LatticeVec& alpha, const LatticeVec& x) {
    if (minkowski(alpha, alpha) != -2) throw Error("NotARoot", "self-intersection is not -2");
    long long c = minkowski(x, alpha);
    LatticeVec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * alpha[i];
    return r;
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(int(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
        if ((int)rows[i].size() != m.n_) throw Error("DimensionMismatch", "matrix is not square");
        for (int j = 0; j < m.n_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticeVec>& cols) {
    IntMatrix m(int(cols.size()));
    for (int j = 0; j < m.n_; ++j) {
        if ((int)cols[j].size() != m.n_) throw Error("DimensionMismatch", "matrix is not square");
        for (int i = 0; i < m.n_; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

LatticeVec IntMatrix::column(int j) const {
    LatticeVec v(n_);
    for (int i = 0; i < n_; ++i) v[i] = (*this)(i, j);
    return v;
}

LatticeVec IntMatrix::apply(const LatticeVec& v) const {
    if ((int)v.size() != n_) throw Error("DimensionMismatch", "vector length differs from matrix size");
    LatticeVec r(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw Error("DimensionMismatch", "matrix sizes differ");
    IntMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            long long v = a(i, k);
            if (!v) continue;
            for (int j = 0; j < a.n_; ++j) r(i, j) += v * b(k, j);
        }
    return r;
}

std::vector<std::vector<long long>> IntMatrix::rows() const {
    std::vector<std::vector<long long>> r(n_, std::vector<long long>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << "[";
        for (int j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

IntMatrix reflection_matrix(const LatticeVec& alpha) {
    int n = int(alpha.size()) - 1;
    std::vector<LatticeVec> cols;
    for (int j = 0; j <= n; ++j) cols.push_back(reflect(alpha, basis_vec(n, j)));
    return IntMatrix::from_columns(cols);
}

bool preserves_form(const IntMatrix& m) {
    int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long long want = i == j ? (i == 0 ? 1 : -1) : 0;
            if (minkowski(m.column(i), m.column(j)) != want) return false;
        }
    return true;
}

std::vector<LatticeVec> simple_roots(int n) {
    if (n < 3) throw Error("BadDimension", "need n >= 3");
    std::vector<LatticeVec> r;
    LatticeVec a0(n + 1, 0);
    a0[0] = 1;
    a0[1] = a0[2] = a0[3] = -1;
    r.push_back(a0);
    for (int j = 1; j < n; ++j) {
        LatticeVec a(n + 1, 0);
        a[j + 1] = 1;
        a[j] = -1;
        r.push_back(a);
    }
    return r;
}

IntMatrix standard_element(int n) {
    if (n < 3) throw Error("BadDimension", "standard element needs n >= 3");
    if (n == 3) return reflection_matrix(simple_roots(3)[0]);
    std::vector<LatticeVec> cols(n + 1, LatticeVec(n + 1, 0));
    auto set = [&](int j, std::initializer_list<std::pair<int, long long>> t) {
        for (auto [i, c] : t) cols[j][i] = c;
    };
    set(0, {{0, 2}, {2, -1}, {3, -1}, {4, -1}});
    set(1, {{0, 1}, {3, -1}, {4, -1}});
    set(2, {{0, 1}, {2, -1}, {4, -1}});
    set(3, {{0, 1}, {2, -1}, {3, -1}});
    for (int j = 4; j < n; ++j) cols[j][j + 1] = 1;
    cols[n][1] = 1;
    return IntMatrix::from_columns(cols);
}

IntMatrix coxeter_element(int n, const std::vector<int>& order) {
    auto roots = simple_roots(n);
    IntMatrix m = IntMatrix::identity(n + 1);
    for (int i : order) {
        if (i < 0 || i >= (int)roots.size()) throw Error("BadArgument", "generator index out of range");
        m = m * reflection_matrix(roots[i]);
    }
    return m;
}

IntPoly char_poly(const IntMatrix& m) {
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    int n = m.dim();
    std::vector<Integer> A(std::size_t(n) * n), Mk(std::size_t(n) * n, 0), T(std::size_t(n) * n);
    for (int i = 0; i < n * n; ++i) A[i] = Integer((long)m.data()[i]);
    std::vector<Integer> c(n + 1, 0);
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        // Mk = A * M_{k-1} + c_{n-k+1} I (M_0 = 0)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Integer s = 0;
                for (int l = 0; l < n; ++l) s += A[i * n + l] * Mk[l * n + j];
                T[i * n + j] = s;
            }
        for (int i = 0; i < n; ++i) T[i * n + i] += c[n - k + 1];
        Mk.swap(T);
        Integer tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) tr += A[i * n + l] * Mk[l * n + i];
        c[n - k] = -tr / k;
    }
    return IntPoly(c);
}

std::vector<Integer> eval_matrix_poly(const IntPoly& p, const IntMatrix& m) {
    int n = m.dim();
    std::vector<Integer> R(std::size_t(n) * n, 0), T(std::size_t(n) * n);
    for (int d = p.degree(); d >= 0; --d) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Integer s = 0;
                for (int l = 0; l < n; ++l) s += R[i * n + l] * (long)m(l, j);
                T[i * n + j] = s;
            }
        for (int i = 0; i < n; ++i) T[i * n + i] += p.coeff(d);
        R.swap(T);
    }
    return R;
}

std::string salem_name(SalemClass c) {
    switch (c) {
        case SalemClass::Salem: return "Salem";
        case SalemClass::Pisot: return "Pisot";
        case SalemClass::Cyclotomic: return "Cyclotomic";
        case SalemClass::Other: return "Other";
    }
    return "?";
}

namespace {

int euler_phi(int d) {
    int r = d;
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            r -= r / p;
        }
    if (d > 1) r -= r / d;
    return r;
}

}  // namespace

SalemReport salem_classify(const IntPoly& p) {
    if (p.degree() < 1) throw Error("BadArgument", "polynomial of degree >= 1 expected");
    SalemReport rep;
    IntPoly r = p;
    int deg = p.degree();
    for (int d = 1; d <= 2 * deg; ++d) {
        if (euler_phi(d) > r.degree()) continue;
        IntPoly phi = cyclotomic(d), q;
        while (r.degree() >= phi.degree() && r.divide_exact(phi, q)) {
            rep.cyclotomic.push_back(d);
            r = q;
        }
    }
    rep.residual = r;
    if (r.degree() == 0) {
        rep.cls = SalemClass::Cyclotomic;
        rep.dominant_root = 1.0;
        return rep;
    }
    if (abs(r.lead()) != 1 || abs(r.coeff(0)) == 0) {
        rep.cls = SalemClass::Other;
        rep.note = "residual is not a unit polynomial";
        rep.dominant_root = dominant_root_modulus(r);
        return rep;
    }
    {
        // repeated factors do not change the root moduli
        std::vector<Scalar> c;
        for (auto& v : r.coeffs()) c.emplace_back(Rational(v));
        UPoly sf = squarefree_part(UPoly(c));
        if (sf.degree() < r.degree()) {
            std::vector<Integer> ic;
            for (auto& v : sf.coeffs()) ic.push_back(v.a().get_num());
            r = IntPoly(ic);
            rep.note = "repeated factors removed";
        }
    }
    auto roots = poly_roots(r).roots;
    int outside = 0, on = 0, ambiguous = 0;
    ComplexF dom{0, 0};
    for (auto& z : roots) {
        double m = std::abs(z);
        if (m > std::abs(dom)) dom = z;
        double g = std::fabs(m - 1.0);
        if (g < kUnitTol) ++on;
        else if (g < 1e-5) ++ambiguous;
        else if (m > 1.0) ++outside;
    }
    rep.dominant_root = std::abs(dom);
    if (ambiguous) {
        rep.cls = SalemClass::Other;
        rep.note = "root modulus within the ambiguity band around 1";
    } else if (outside != 1 || std::fabs(dom.imag()) > 1e-8 || dom.real() <= 1.0) {
        rep.cls = SalemClass::Other;
        rep.note = std::to_string(outside) + " roots outside the unit circle";
    } else {
        rep.cls = on ? SalemClass::Salem : SalemClass::Pisot;
        rep.dominant_root = dom.real();
    }
    return rep;
}

double spectral_radius(const IntPoly& cp) {
    auto rep = salem_classify(cp);
    if (rep.cls == SalemClass::Cyclotomic) return 1.0;
    return std::max(1.0, rep.dominant_root);
}

double spectral_radius(const IntMatrix& m) { return spectral_radius(char_poly(m)); }

namespace {

struct VecHash {
    std::size_t operator()(const LatticeVec& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long long x : v) h = (h ^ std::size_t(x)) * 1099511628211ull;
        return h;
    }
};

// interior point of the fundamental chamber, scaled to integers
LatticeVec chamber_vector(int n) {
    auto roots = simple_roots(n);
    std::vector<LatticeVec> rows = roots;
    LatticeVec K(n + 1, 1);
    K[0] = -3;
    rows.push_back(K);
    int m = n + 1;
    // row . v = row_0 v_0 - sum row_i v_i
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = Rational((long)(j == 0 ? rows[i][j] : -rows[i][j]));
        // alpha_0 and e_j - e_{j+1} form a simple system
        a[i][m] = (i == 0 || i == n) ? 1 : -1;
    }
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        for (int i = c; i < m; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) throw Error("BadDimension", "degenerate root system");
        std::swap(a[c], a[piv]);
        for (int i = 0; i < m; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (int j = c; j <= m; ++j) a[i][j] -= f * a[c][j];
        }
    }
    Integer lcm = 1;
    std::vector<Rational> v(m);
    for (int i = 0; i < m; ++i) {
        v[i] = a[i][m] / a[i][i];
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v[i].get_den_mpz_t());
    }
    LatticeVec out(m);
    for (int i = 0; i < m; ++i) {
        Rational s = v[i] * Rational(lcm);
        out[i] = s.get_num().get_si();
    }
    return out;
}

}  // namespace

std::uint64_t group_order_bfs(int n, std::uint64_t budget) {
    if (n < 3 || n > 8) throw Error("BadDimension", "group order needs 3 <= n <= 8");
    // W is finite here and acts freely on the orbit of a chamber vector
    auto roots = simple_roots(n);
    LatticeVec v = chamber_vector(n);
    std::unordered_set<LatticeVec, VecHash> seen{v};
    std::vector<LatticeVec> frontier{v};
    while (!frontier.empty()) {
        std::vector<LatticeVec> next;
        for (auto& x : frontier)
            for (auto& a : roots) {
                LatticeVec y = reflect(a, x);
                if (seen.insert(y).second) {
                    if (seen.size() > budget)
                        throw Error("BudgetExceeded", "more than " + std::to_string(budget) + " elements");
                    next.push_back(std::move(y));
                }
            }
        frontier.swap(next);
    }
    return seen.size();
}

}  // namespace cremona
