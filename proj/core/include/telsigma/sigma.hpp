#pragma once

#include "telsigma/bilinear.hpp"
#include "telsigma/expansion.hpp"
#include "telsigma/schur.hpp"
#include "telsigma/useries.hpp"

namespace telsigma {

// xi_{i,j}: coefficient of t^i in t^{g-1} phi_j(t); entries are integral and
// for j > g satisfy xi_{i,j} = 0 below i = -j with xi_{-j,j} = 1. phi
// expansions are cached per column.
class XiTable {
public:
    XiTable(const CurveModel& cm, const ExpansionSet& es);
    const LambdaPolynomial& entry(long i, long j);
    long genus() const { return g_; }
    long cap() const { return es_.cap; }

private:
    const CurveModel& cm_;
    const ExpansionSet& es_;
    long g_;
    std::vector<TSeries> columns_;  // columns_[j-1] = t^{g-1} phi_j(t)
    void ensure(long j);
};

// Determinant det(xi_{mu_i - i, j}) at size N = max(len(mu), g); rows below
// -g are eliminated through their forced unit entries, the rest expanded by
// Laplace. Recomputed at N+1 and N+2; disagreement is a stabilization failure.
LambdaPolynomial xi_mu(XiTable& xi, const Partition& mu);

// tau(u) = sum over |mu| <= W of xi_mu S_mu(u); every Hurwitz coefficient is
// asserted to lie in Z[lambda], and xi_mu to be homogeneous of weight
// |mu| - |mu(A_m)|.
USeries tau_series(const CurveModel& cm, const ExpansionSet& es, long w_bound);

struct BcnData {
    std::vector<std::vector<LambdaPolynomial>> b;      // unit upper triangular
    std::vector<std::vector<LambdaPolynomial>> b_inv;  // integral entries
    std::vector<LambdaPolynomial> c;                   // (c_{w_1} .. c_{w_g})
    std::vector<std::vector<LambdaPolynomial>> n;      // symmetric (q_{w_i,w_j})
};

BcnData assemble_bcn(const CurveModel& cm, const ExpansionSet& es, const QTable& q);

struct SigmaExpansion {
    USeries series;
    std::vector<long> a;  // the curve
    std::vector<long> b_used;
    long w_bound = 0;
    Partition mu;  // mu(A_m), the leading Schur partition
};

// sigma(u) = exp(c B^{-1} u - (1/2) u^T (B^{-1})^T N B^{-1} u) tau(B^{-1} u),
// truncated at weighted degree w_bound. Asserts the leading part equals
// S_{mu(A_m)}(u) and that every coefficient is homogeneous of weight
// sum w_i n_i - |mu(A_m)|.
SigmaExpansion sigma_series(const CurveModel& cm, const ExpansionSet& es, const BcnData& bcn,
                            const USeries& tau, long w_bound);

SigmaExpansion sigma_squared(const SigmaExpansion& se);

// Round trip of the tau/sigma relation: exp(-c v + (1/2) v^T N v) sigma(B v)
// must reproduce tau.
void check_tau_sigma_round_trip(const CurveModel& cm, const BcnData& bcn, const USeries& tau,
                                const SigmaExpansion& se);

}  // namespace telsigma
