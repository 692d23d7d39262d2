#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/poly.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

class PolyAut {
public:
    PolyAut() : f1_(BiPoly::x()), f2_(BiPoly::y()) {}
    PolyAut(BiPoly f1, BiPoly f2) : f1_(std::move(f1)), f2_(std::move(f2)) {}
    static PolyAut identity() { return PolyAut(); }
    static PolyAut swap() { return PolyAut(BiPoly::y(), BiPoly::x()); }

    const BiPoly& f1() const { return f1_; }
    const BiPoly& f2() const { return f2_; }
    int degree() const { return std::max(f1_.degree(), f2_.degree()); }
    BiPoly jacobian() const;
    bool is_identity() const { return f1_ == BiPoly::x() && f2_ == BiPoly::y(); }
    bool operator==(const PolyAut& o) const { return f1_ == o.f1_ && f2_ == o.f2_; }
    bool operator!=(const PolyAut& o) const { return !(*this == o); }

    std::string str() const { return f1_.str() + ", " + f2_.str(); }
    static PolyAut parse(const std::string& s);

private:
    BiPoly f1_, f2_;
};

// f after g
PolyAut aut_compose(const PolyAut& f, const PolyAut& g);
RatMap aut_to_ratmap(const PolyAut& f);

// (a x + b y + c, d x + e y + f)
struct AffineFactor {
    std::array<Scalar, 6> m;
    bool triangular() const { return m[3].is_zero(); }
};
// (alpha x + P(y), beta y + gamma)
struct ElementaryFactor {
    Scalar alpha, beta, gamma;
    UPoly P;
};

struct JungFactor {
    bool affine = true;
    AffineFactor A;
    ElementaryFactor E;
    PolyAut as_aut() const;
    PolyAut inverse() const;
    bool in_A() const;
    bool in_E() const;
    int degree() const;
    std::string str() const;
};
JungFactor make_affine(const std::array<Scalar, 6>& m);
JungFactor make_elementary(const Scalar& alpha, const UPoly& P, const Scalar& beta, const Scalar& gamma);

// f = factors[0] o factors[1] o ...
struct JungWord {
    std::vector<JungFactor> factors;
    PolyAut recompose() const;
    std::string str() const;
};
constexpr int kJungDegreeCap = 64;

// nullopt is NotAutomorphism
std::optional<JungWord> jung_decompose(const PolyAut& f);
// merges neighbours of the same type and absorbs factors in both groups
JungWord reduce_word(JungWord w);

struct HenonFactor {
    UPoly P;
    Scalar delta;  // (y, P(y) - delta x)
    PolyAut as_aut() const;
};
struct HenonReport {
    bool is_henon = false;
    std::vector<HenonFactor> cyclic_factors;
    long dyn_degree = 1;
    PolyAut conjugator;  // conjugator o f o conjugator^-1 = product of cyclic factors
    bool verified = false;
};
HenonReport henon_classify(const PolyAut& f);

PolyAut aut_inverse(const PolyAut& f);

}  // namespace cremona
