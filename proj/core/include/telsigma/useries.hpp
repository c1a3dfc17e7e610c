#pragma once

#include <map>
#include <vector>

#include "telsigma/lambda_poly.hpp"

namespace telsigma {

// Truncated series in u_1..u_g with LambdaPolynomial coefficients, graded by
// deg u_i = w_i (the gap sequence) and truncated at weighted degree <= bound.
// Coefficients are plain Taylor coefficients; the Hurwitz-normalized value of
// a term is coeff * prod n_i!.
class USeries {
public:
    USeries() = default;
    USeries(std::vector<long> weights, long bound, long cap);

    static USeries constant(std::vector<long> weights, long bound, long cap, const Rational& c);

    long bound() const { return bound_; }
    long cap() const { return cap_; }
    const std::vector<long>& weights() const { return weights_; }
    size_t nvars() const { return weights_.size(); }
    long u_weight(const std::vector<long>& n) const;

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<long>, LambdaPolynomial>& terms() const { return terms_; }
    const LambdaPolynomial& coeff(const std::vector<long>& n) const;
    Int hurwitz_factor(const std::vector<long>& n) const;  // prod n_i!
    LambdaPolynomial hurwitz_coeff(const std::vector<long>& n) const;

    void add_term(const std::vector<long>& n, const LambdaPolynomial& c);
    USeries& operator+=(const USeries& o);
    USeries& operator-=(const USeries& o);
    friend USeries operator+(USeries a, const USeries& b) { return a += b; }
    friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
    USeries operator-() const;
    bool operator==(const USeries& o) const { return terms_ == o.terms_; }

    USeries scaled(const Rational& c) const;
    USeries scaled_poly(const LambdaPolynomial& p) const;
    // Keep only terms of weighted degree <= w.
    USeries truncated(long w) const;
    // Keep only terms of weighted degree exactly w.
    USeries weight_part(long w) const;
    long min_u_weight() const;  // kNoCap when zero

private:
    void truncate_self();

    std::vector<long> weights_;
    long bound_ = 0;
    long cap_ = kNoCap;
    std::map<std::vector<long>, LambdaPolynomial> terms_;
};

USeries us_mul(const USeries& a, const USeries& b);
USeries us_pow(const USeries& a, long n);

// exp of a series with no constant term, as the product of single-term
// exponentials; each factor's Hurwitz structure is what the integrality
// arguments rely on.
USeries us_exp(const USeries& s);

// u -> M u for a g x g matrix of LambdaPolynomial entries.
USeries us_substitute_linear(const USeries& s, const std::vector<std::vector<LambdaPolynomial>>& m);

}  // namespace telsigma
