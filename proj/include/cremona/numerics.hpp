#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "cremona/intpoly.hpp"
#include "cremona/scalar.hpp"

namespace cremona {

using ComplexL = std::complex<long double>;

struct RootSet {
    std::vector<ComplexF> roots;     // with repetition, one per degree
    std::vector<int> multiplicity;   // cluster size of each entry
    double residual_bound = 0;       // max |p(r)| / coefficient scale
};

// companion eigenvalues (Eigen) + Newton polish in long double
RootSet poly_roots(const std::vector<ComplexL>& coeffs_low_to_high);
RootSet poly_roots(const std::vector<double>& coeffs_low_to_high);
RootSet poly_roots(const IntPoly& p);
// long double roots for the exact root recognizer
std::vector<ComplexL> poly_roots_ld(const std::vector<ComplexL>& coeffs_low_to_high);

double dominant_root_modulus(const IntPoly& p);

enum class Family { FAlphaBeta, BkFab, McMullen };
enum class Projection { Omega1, Omega2 };

Family parse_family(const std::string& s);
Projection parse_projection(const std::string& s);
std::string family_name(Family f);

using CPoint = std::array<ComplexF, 2>;

struct Orbit {
    Family family;
    ComplexF p1, p2;  // (alpha, beta) or (a, b)
    CPoint seed;
    std::vector<CPoint> points;  // f^1(seed), f^2(seed), ...
    bool diverged = false;
};

// one step in the affine chart; false at a pole
bool family_step(Family fam, ComplexF p1, ComplexF p2, const CPoint& in, CPoint& out);
Orbit iterate_family(Family fam, ComplexF p1, ComplexF p2, CPoint seed, std::size_t n);

struct CloudPoint {
    std::size_t n;
    std::array<double, 3> c;  // omega1: (Re p1, Im p1, Im p2); omega2: (Re p1, Re p2, Im p2)
};

struct OrbitCloud {
    Projection proj;
    std::vector<CloudPoint> points;
    bool diverged = false;
};

OrbitCloud project_cloud(const Orbit& orbit, Projection proj);

// projective Bedford-Kim orbit of q = (1:-a:0); out[j] = f^j(q), normalized
std::vector<std::array<ComplexF, 3>> bk_orbit_numeric(ComplexF a, ComplexF b, int n);
// (f^n(q)_1/f^n(q)_0 + b, f^n(q)_2/f^n(q)_0 + a)
std::array<ComplexF, 2> vn_residual_numeric(ComplexF a, ComplexF b, int n);

struct VnSolution {
    ComplexF a, b;
    double residual = 0;
    int steps = 0;
};

// damped Newton, central differences step 1e-7, 200 steps, residual < 1e-10
VnSolution newton_solve_vn(int n, ComplexF a0, ComplexF b0, int max_steps = 200);

// orbit of w under g(w) = c - 1/w
std::vector<ComplexF> mobius_orbit(ComplexF c, ComplexF w0, int n);

// evaluates complex expressions like exp(2*i*sqrt(3)) or 1e-4i
ComplexF parse_complex(const std::string& s);

}  // namespace cremona
