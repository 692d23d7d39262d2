#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/intpoly.hpp"
#include "cremona/ratmap.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

namespace cat {

RatMap sigma();  // (yz : xz : xy)
RatMap rho();    // (xy : z^2 : yz)
RatMap tau();    // (x^2 : xy : y^2 - xz)
RatMap psi();    // (y^2 z : x(xz + y^2) : y(xz + y^2))
RatMap psi_inverse_reference();
RatMap phi_n(int n);  // (x z^{n-1} + y^n : y z^{n-1} : z^n)
RatMap eta();
RatMap e_map();
RatMap h_gizatullin();
// (x(bx + y) : z(bx + y) : x(ax + z))
RatMap f_ab(const Scalar& a, const Scalar& b);
// ((alpha x + y) z : beta y (x + z) : z (x + z))
RatMap f_alpha_beta(const Scalar& alpha, const Scalar& beta);
// ((a z + y) x : (b x + y) z : x z)
RatMap mcmullen(const Scalar& a, const Scalar& b);
RatMap henon();
RatMap bk_c1();  // (x z^2 : z^3 : x^3 + z^3 - y z^2)
std::vector<RatMap> cubic_table_rows();

Mat3 phi3_alpha(const Scalar& alpha);
Mat3 psi_alpha(const Scalar& alpha);  // over Q(sqrt -3)
Mat3 conj_phi3(const Scalar& alpha, const Scalar& alpha0);
Mat3 conj_psi(const Scalar& alpha, const Scalar& alpha0);

IntMatrix m_sigma();
IntMatrix m_fab_y();  // 3x3
IntMatrix phi3_16();
IntMatrix psi_16();
IntMatrix bk_c1_16();
IntMatrix bk_matrix(int n);
IntPoly sixteen_charpoly();

}  // namespace cat

IntPoly lehmer();
IntPoly chi_n(int n);
IntPoly chi_nk(int n, int k);
IntPoly p_nm(int n, int m);

std::pair<Scalar, Scalar> phi_j(int j, const Scalar& t);
HomPoly invariant_cubic(const Scalar& t, const Scalar& a, const Scalar& b);

struct VnResidual {
    ProjPoint q, p_star;
    std::vector<ProjPoint> orbit;  // f^0(q) .. f^n(q)
    std::array<Scalar, 3> cross;   // f^n(q) x p_*
    bool on_vn = false;
};
VnResidual vn_residual(const Scalar& a, const Scalar& b, int n);

// p_{n+1} x p_1 for the McMullen family, p_4 = (a : b : 1), p_1 = (0 : 0 : 1)
std::array<Scalar, 3> mcmullen_residual(const Scalar& a, const Scalar& b, int n);

struct VerifyItem {
    std::string label;
    bool pass = false;
    std::string detail;
};
struct VerifyReport {
    std::string name;
    std::vector<VerifyItem> items;
    bool all_pass() const;
};

std::vector<std::string> catalog_names();
std::string catalog_description(const std::string& name);
VerifyReport verify_entry(const std::string& name);

}  // namespace cremona
