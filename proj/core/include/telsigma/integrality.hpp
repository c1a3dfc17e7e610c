#pragma once

#include <string>
#include <vector>

#include "telsigma/lambda_poly.hpp"
#include "telsigma/semigroup.hpp"

namespace telsigma {

struct SigmaExpansion;
class TSeries;

// Target coefficient rings for the Hurwitz checks. The two rescalings are
// independent: lambda~ halves exactly the odd-weight symbols, lambda-bar
// halves exactly the symbols with at least two odd exponents.
enum class RingTag { z_lambda, z_lambda_tilde, z_lambda_bar, q_lambda };

std::string ring_name(RingTag tag);

struct RingSpec {
    RingTag tag = RingTag::z_lambda;
    std::vector<char> halved;  // per catalog symbol
    static RingSpec make(RingTag tag, const TelescopicData& td);
};

struct Witness {
    std::vector<long> u_exp;  // empty for scalar-context checks
    LambdaMonomial monomial;
    Rational coeff;
    std::string context;
};

struct IntegralityReport {
    RingTag ring = RingTag::z_lambda;
    enum class Verdict { pass, fail, skipped } verdict = Verdict::pass;
    std::string note;
    std::vector<Witness> witnesses;
};

// Coefficient-by-coefficient ring membership: a monomial with h halved
// symbols (counted with multiplicity) admits denominator 2^h and nothing else.
bool check_membership(const LambdaPolynomial& p, const RingSpec& ring, Witness* witness = nullptr);

// True iff every ell-row has at most one odd entry; sufficient for the
// lambda-bar theorem to apply.
bool chi_condition(const TelescopicData& td);

// Theorem-level verification: sigma vs Z[lambda~], sigma^2 vs Z[lambda],
// sigma vs Z[lambda-bar] (skipped with reason when the chi condition fails),
// and the 2 c_k side check. Failures come back as verdicts, not exceptions.
std::vector<IntegralityReport> verify_theorems(const TelescopicData& td, const SigmaExpansion& sigma,
                                               const SigmaExpansion& sigma_sq,
                                               const TSeries& c_series);

}  // namespace telsigma
