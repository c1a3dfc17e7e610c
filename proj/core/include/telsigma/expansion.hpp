#pragma once

#include "telsigma/curve.hpp"
#include "telsigma/tseries.hpp"

namespace telsigma {

// Integer vector with sum a_i b_i = -1; t = prod x_i^{b_i} is the local
// parameter at infinity. Expansions depend on it, sigma must not.
struct BVector {
    std::vector<long> b;
};

// Deterministic canonical choice: iterated extended Euclid over the sequence
// with a minimal-absolute-value Bezout pair at each fold, then one global sign.
BVector choose_b(const TelescopicData& td);

struct DMatrix {
    std::vector<std::vector<long>> rows;     // m x m
    std::vector<std::vector<long>> inverse;  // integer inverse
    long det = 0;                            // always (-1)^m
};

// Rows 2..m carry -ell_{i,.} with d_{i-1}/d_i on the diagonal; the last row is
// b. det is computed exactly and asserted to be (-1)^m.
DMatrix build_d_matrix(const TelescopicData& td, const BVector& b);

struct ExpansionSet {
    BVector b;
    DMatrix d;
    long t_order = 0;
    long cap = kNoCap;
    std::vector<TSeries> x;       // x_i(t) = t^{-a_i} (1 + ...), grade a_i
    std::vector<TSeries> x_unit;  // t^{a_i} x_i(t), power series with constant 1
    std::vector<TSeries> omega;   // omega_i/dt = t^{w_i-1}(1 + ...), filled by expand_omega
    TSeries c_series;             // sum c_k t^{k-1}, filled by compute_c_series
};

// Solve the expansion order by order through the integer inverse of D;
// asserts p_{i,k} integral and homogeneous of weight k, and that the product
// prod x_i^{b_i} reproduces t on the computed window.
ExpansionSet expand_x(const CurveModel& cm, const BVector& b, long t_order, long cap);

// Substitute the x expansions into an m-variable polynomial.
TSeries expand_at_infinity(const ExpansionSet& es, const XPoly& p);

// omega_i/dt = -phi_{g+1-i}(t) x_1'(t) / det G_1(t); asserts the t^{w_i-1}
// leading form with unit coefficient, integral coefficients, and the gauge
// identity dx_1/det G_1 = (-1)^{k-1} dx_k/det G_k for every k.
void expand_omega(const CurveModel& cm, ExpansionSet& es);

// sum c_k t^{k-1} = (1/2) h'/h for h = 1 + sum b_{g,j} t^j; asserts
// 2 c_k integral and c_k in Z[lambda~].
void compute_c_series(const CurveModel& cm, ExpansionSet& es);

}  // namespace telsigma
