#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

using Mat3 = std::array<std::array<Scalar, 3>, 3>;
Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Scalar mat3_det(const Mat3& a);
Mat3 mat3_inverse(const Mat3& a);

// first nonzero coordinate is 1
class ProjPoint {
public:
    ProjPoint(const Scalar& x, const Scalar& y, const Scalar& z);
    explicit ProjPoint(const std::array<Scalar, 3>& c) : ProjPoint(c[0], c[1], c[2]) {}
    const std::array<Scalar, 3>& coords() const { return c_; }
    const Scalar& operator[](int i) const { return c_[i]; }
    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(c_ == o.c_); }
    bool operator<(const ProjPoint& o) const { return str() < o.str(); }
    std::string str() const;
    static ProjPoint parse(const std::string& s);

private:
    std::array<Scalar, 3> c_;
};

class RatMap {
public:
    // components already coprime; scaled to canonical form
    explicit RatMap(std::array<HomPoly, 3> comps);
    static RatMap identity();
    static RatMap linear(const Mat3& m);  // x -> m x on column vectors

    int degree() const { return c_[0].degree(); }
    const std::array<HomPoly, 3>& components() const { return c_; }
    const HomPoly& operator[](int i) const { return c_[i]; }
    long long field() const;
    std::size_t digits() const;
    std::size_t terms() const { return c_[0].size() + c_[1].size() + c_[2].size(); }
    bool is_identity() const;
    bool operator==(const RatMap& o) const { return c_ == o.c_; }
    bool operator!=(const RatMap& o) const { return !(c_ == o.c_); }

    // nullopt at an indeterminacy point
    std::optional<ProjPoint> apply(const ProjPoint& p) const;

    std::string str() const;
    static std::array<HomPoly, 3> parse_raw(const std::string& s);
    static RatMap parse(const std::string& s);

private:
    std::array<HomPoly, 3> c_;
};

// divides out the common factor; ZeroMap when nothing is left
RatMap normalize(const std::array<HomPoly, 3>& raw);
// f after g
RatMap compose(const RatMap& f, const RatMap& g);
std::array<HomPoly, 3> compose_raw(const RatMap& f, const RatMap& g);
RatMap power(const RatMap& f, int k);

std::optional<RatMap> inverse(const RatMap& f, int target_degree);

std::optional<ProjPoint> is_contracted_line(const RatMap& f, const LinearForm& L);

struct PointSet {
    std::vector<ProjPoint> points;
    bool complete = true;  // false: some zero is not rational over the working field
};
// common zeros of finitely-intersecting forms
PointSet common_zeros(const std::vector<HomPoly>& F, long long d);
// d widens the working field
PointSet indeterminacy_points(const RatMap& f, long long d = 0);

enum class Stratum { Sigma0, Sigma1, Sigma2, Sigma3, NotBirational, NotQuadratic, FieldObstruction };
std::string stratum_name(Stratum s);

struct QuadClass {
    Stratum stratum = Stratum::NotQuadratic;
    std::vector<LinearFactor> det_jac_lines;
    std::vector<std::optional<ProjPoint>> contraction_targets;  // per line
    PointSet ind_points;
    std::string note;
};
QuadClass quadratic_classify(const RatMap& f, long long d = 0);
// sees the apparent linear factor before normalization
QuadClass quadratic_classify(const std::array<HomPoly, 3>& raw, long long d = 0);

struct MultiplicityProfile {
    int degree = 0;
    std::vector<int> m;  // nonincreasing
    bool consistent() const;
};
std::vector<MultiplicityProfile> noether_solve(int nu, std::optional<int> largest = std::nullopt);

// (x,y) -> ((a x + b)/(c x + d), (al y + be)/(ga y + de)) in the chart z = 1
struct JonqElement {
    std::array<RatFunc, 4> vertical;  // a, b, c, d in y
    std::array<Scalar, 4> base;       // al, be, ga, de
    static JonqElement identity();
};
RatMap jonq_to_ratmap(const JonqElement& j);
JonqElement jonq_compose(const JonqElement& j1, const JonqElement& j2);
JonqElement jonq_inverse(const JonqElement& j);
bool jonq_is_identity(const JonqElement& j);
// phi_{nu-1}, phi_nu, psi_{nu-2}, psi_{nu-1} as binary forms in (y, z)
JonqElement jonq_builder(const HomPoly& phi1, const HomPoly& phi0, const HomPoly& psi2, const HomPoly& psi1,
                         const std::array<Scalar, 4>& base);
std::array<HomPoly, 3> jonq_display(const HomPoly& phi1, const HomPoly& phi0, const HomPoly& psi2, const HomPoly& psi1,
                                    const std::array<Scalar, 4>& base);

}  // namespace cremona
