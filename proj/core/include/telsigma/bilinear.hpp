#pragma once

#include "telsigma/biseries.hpp"
#include "telsigma/curve.hpp"
#include "telsigma/expansion.hpp"

namespace telsigma {

// Table of coefficients indexed by pairs of B(A_m) exponent vectors; entries
// are integral and homogeneous of weight total_degree - sum a_k (i_k + j_k).
struct CoeffTable {
    long total_degree = 0;
    std::map<std::pair<ExponentVector, ExponentVector>, LambdaPolynomial> entries;

    const LambdaPolynomial& at(const ExponentVector& i, const ExponentVector& j) const;
    void set(const ExponentVector& i, const ExponentVector& j, LambdaPolynomial v);
};

// Numerator of d_Q Omega in 2m variables (x block, y block), jointly
// homogeneous of degree 2(2g-1+a_1).
XPoly dq_omega_numerator(const CurveModel& cm);

// Reduce the numerator modulo the curve relations in x and then in y; entries
// land in Z[lambda] with the weight formula asserted.
CoeffTable tilde_c_table(const CurveModel& cm);

// The eta-coefficient table via the three-case recurrence on the first
// exponent; entries with sum a.i >= sum a.j vanish by construction.
CoeffTable eta_c_table(const CurveModel& cm, const CoeffTable& tilde_c);

struct QTable {
    long window = 0;  // entries kept for i + j <= window (i, j >= 1)
    std::map<std::pair<long, long>, LambdaPolynomial> q;
    const LambdaPolynomial& at(long i, long j) const;
};

// Expansion coefficients of the fundamental bilinear form at infinity:
// omega-hat = (1/(t_P-t_Q)^2 + sum q_{i,j} t_P^{i-1} t_Q^{j-1}) dt_P dt_Q.
// Symmetry, integrality and weight i+j are asserted for every entry.
QTable q_table(const CurveModel& cm, const ExpansionSet& es, const CoeffTable& tilde_c,
               const CoeffTable& eta_c, long window);

}  // namespace telsigma
