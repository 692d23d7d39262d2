#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cremona/ratmap.hpp"

namespace cremona {

enum class DegreeMode { Auto, Exact, Probe };

struct DynConfig {
    std::size_t budget_digits = 1000000;
    double budget_work = 4e8;  // coefficient-term products per composition
    std::uint64_t seed = 1;
    DegreeMode mode = DegreeMode::Auto;
};

struct DegreeSequence {
    std::vector<long> degrees;  // degrees[k-1] = deg f^k
    int horizon = 0;
    int exact_upto = 0;  // iterates computed exactly
    int period = 0;      // f^period = id certified, 0 if not
    std::string method;
};

DegreeSequence degree_sequence(const RatMap& f, int N, const DynConfig& cfg = {});
// degrees of f^k restricted to a random line over a word-size prime field
std::vector<long> probe_degrees(const RatMap& f, int N, std::uint64_t seed);

double lambda_estimate(const DegreeSequence& s);

enum class Growth { Bounded, Linear, Quadratic, Exponential, Undetermined };
std::string growth_name(Growth g);

struct GrowthClass {
    Growth label = Growth::Undetermined;
    double lambda = 1.0;
    std::array<double, 3> residuals = {0, 0, 0};  // linear, quadratic, exponential
    std::string note;
};
constexpr double kGrowthMargin = 0.15;

// oracle(k) answers whether f^k = id
GrowthClass growth_classify(const DegreeSequence& s, const std::function<bool(int)>& oracle = {});

struct Collision {
    ProjPoint target;  // image of a contracted curve
    int k;             // f^k(target) is indeterminate
    ProjPoint ind_point;
};

struct StabilityReport {
    int horizon = 0;
    std::vector<ProjPoint> targets;
    std::vector<ProjPoint> ind_points;
    std::vector<Collision> collisions;
    std::string summary;
};

// (x, y) -> (x^a y^b, x^c y^d) for B = [[a, b], [c, d]], entries may be negative
RatMap monomial_map(const std::array<std::array<long, 2>, 2>& B);

StabilityReport stability_probe(const RatMap& f, const RatMap& f_inv, int N);

}  // namespace cremona
