#pragma once

#include <map>

#include "telsigma/semigroup.hpp"
#include "telsigma/xpoly.hpp"

namespace telsigma {

// The defining polynomials with their derived matrices. F[i] (0-based i >= 1)
// is F_{i+1}; partials[i][j] is dF_{i+1}/dx_{j+1}; det_g[k] is det G_{k+1},
// the minor of the Jacobian with column k+1 removed.
struct CurveModel {
    TelescopicData td;
    std::vector<XPoly> F;
    std::vector<std::vector<XPoly>> partials;
    std::vector<XPoly> det_g;
};

CurveModel build_curve(const TelescopicData& td);

// Decomposition over the monomial basis: phi order -> coefficient.
using NormalForm = std::map<long, LambdaPolynomial>;

// Rewrite p modulo the curve relations until every exponent lies in B(A_m).
// The largest out-of-bound variable index is reduced first; coefficients of
// integer inputs stay integer and the top coefficient of a monomial is 1.
NormalForm normal_form(const CurveModel& cm, const XPoly& p);

// Reassemble a normal form as a polynomial supported on B(A_m) exponents.
XPoly normal_form_poly(const CurveModel& cm, const NormalForm& nf);

// Asserts det G_k = (-1)^{k+1} a_k x^gamma + lower pole orders on the curve,
// with gamma the B(A_m) representative of order 2g-1+a_k. k is 1-based.
// Returns gamma.
ExponentVector check_det_gk_leading(const CurveModel& cm, int k);

// H matrix in 2m variables (x block then y block); entries h_{i,j} for
// 2 <= i,j <= m at [i-2][j-2], each verified by exact division.
std::vector<std::vector<XPoly>> h_matrix(const CurveModel& cm);

// Convenience: F_i or det G_k moved to the y block (variables m..2m-1).
XPoly to_y_vars(const XPoly& p, int m);
XPoly to_xy_vars(const XPoly& p, int m);  // widen an m-variable poly to 2m

}  // namespace telsigma
