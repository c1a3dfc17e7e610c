#pragma once

// Independent classical oracle for the elliptic case: the Laurent
// coefficients of the P-function satisfy c_2 = g2/20, c_3 = g3/28 and
//   c_k = 3 / ((2k+1)(k-3)) sum_{h=2}^{k-2} c_h c_{k-h},   k >= 4,
// and sigma = u exp(-sum_{k>=2} c_k u^{2k} / ((2k)(2k-1))). Everything is
// computed in the lambda-polynomial ring with g2, g3 given as polynomials.

#include "telsigma/useries.hpp"

namespace telsigma_test {

inline telsigma::USeries classical_weierstrass_sigma(const telsigma::LambdaPolynomial& g2,
                                                     const telsigma::LambdaPolynomial& g3,
                                                     long w_bound) {
    using namespace telsigma;
    size_t kmax = static_cast<size_t>(w_bound / 2 + 1);
    std::vector<LambdaPolynomial> c(kmax + 1);
    if (kmax >= 2)
        c[2] = g2.scaled(Rational(1, 20));
    if (kmax >= 3)
        c[3] = g3.scaled(Rational(1, 28));
    for (size_t k = 4; k <= kmax; ++k) {
        LambdaPolynomial acc;
        for (size_t h = 2; h + 2 <= k; ++h)
            acc += lp_mul(c[h], c[k - h]);
        Rational factor(3);
        factor /= (2 * static_cast<long>(k) + 1) * (static_cast<long>(k) - 3);
        c[k] = acc.scaled(factor);
    }
    USeries arg({1}, w_bound, kNoCap);
    for (size_t k = 2; k <= kmax && 2 * static_cast<long>(k) <= w_bound; ++k) {
        Rational f(-1);
        f /= (2 * static_cast<long>(k)) * (2 * static_cast<long>(k) - 1);
        arg.add_term({2 * static_cast<long>(k)}, c[k].scaled(f));
    }
    USeries u1({1}, w_bound, kNoCap);
    u1.add_term({1}, LambdaPolynomial::constant(1));
    return us_mul(u1, us_exp(arg));
}

}  // namespace telsigma_test
