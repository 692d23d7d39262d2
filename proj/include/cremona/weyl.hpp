#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/intpoly.hpp"

namespace cremona {

// coordinates (x0, x1, ..., xn) in the basis e0..en
using LatticeVec = std::vector<long long>;

LatticeVec basis_vec(int n, int i);
long long minkowski(const LatticeVec& u, const LatticeVec& v);
// x + (x.alpha) alpha
LatticeVec reflect(const LatticeVec& alpha, const LatticeVec& x);

// square integer matrix, column j is the image of e_j
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int dim) : n_(dim), a_(std::size_t(dim) * dim, 0) {}
    static IntMatrix identity(int dim);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    static IntMatrix from_columns(const std::vector<LatticeVec>& cols);

    int dim() const { return n_; }
    long long& operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
    long long operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
    LatticeVec column(int j) const;
    LatticeVec apply(const LatticeVec& v) const;
    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    const std::vector<long long>& data() const { return a_; }
    std::vector<std::vector<long long>> rows() const;
    std::string str() const;

private:
    int n_ = 0;
    std::vector<long long> a_;
};

IntMatrix reflection_matrix(const LatticeVec& alpha);
// M^T J M == J
bool preserves_form(const IntMatrix& m);

// alpha_0 = e0 - e1 - e2 - e3, alpha_j = e_{j+1} - e_j
std::vector<LatticeVec> simple_roots(int n);
IntMatrix standard_element(int n);
// product of the simple reflections in the given order
IntMatrix coxeter_element(int n, const std::vector<int>& order);

IntPoly char_poly(const IntMatrix& m);
// p(M), exact
std::vector<Integer> eval_matrix_poly(const IntPoly& p, const IntMatrix& m);

enum class SalemClass { Salem, Pisot, Cyclotomic, Other };
std::string salem_name(SalemClass c);

struct SalemReport {
    SalemClass cls = SalemClass::Other;
    double dominant_root = 1.0;
    std::vector<int> cyclotomic;  // stripped orders, with multiplicity
    IntPoly residual;
    std::string note;
};
constexpr double kUnitTol = 1e-8;

SalemReport salem_classify(const IntPoly& p);
double spectral_radius(const IntPoly& charpoly);
double spectral_radius(const IntMatrix& m);

std::uint64_t group_order_bfs(int n, std::uint64_t budget = 1000000);

}  // namespace cremona
