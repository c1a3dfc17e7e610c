#pragma once

#include <map>
#include <vector>

#include "telsigma/lambda_poly.hpp"

namespace telsigma {

// Sparse polynomial in x_1..x_n with LambdaPolynomial coefficients. Used both
// for the curve polynomials (n = m) and for bivariate P/Q work (n = 2m, the
// second block holding the y variables).
class XPoly {
public:
    XPoly() : nvars_(0) {}
    explicit XPoly(int nvars) : nvars_(nvars) {}
    static XPoly constant(int nvars, const LambdaPolynomial& c);
    static XPoly variable(int nvars, int var);
    static XPoly monomial(const ExponentVector& e, const LambdaPolynomial& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExponentVector, LambdaPolynomial>& terms() const { return terms_; }
    const LambdaPolynomial& coeff(const ExponentVector& e) const;

    void add_term(const ExponentVector& e, const LambdaPolynomial& c);
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    XPoly operator-() const;
    bool operator==(const XPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    XPoly scaled(const LambdaPolynomial& c, long cap = kNoCap) const;
    XPoly derivative(int var) const;

    // Reindex variables: new exponent slot renaming[v] receives old slot v.
    XPoly renamed(const std::vector<int>& renaming, int new_nvars) const;

    // Joint weighted degree: weight(coefficient) + sum var_weights[v] * e[v].
    // Returns false unless every term has the same joint degree.
    bool is_jointly_homogeneous(const std::vector<long>& var_weights, long* degree = nullptr) const;
    long joint_degree_max(const std::vector<long>& var_weights) const;

private:
    int nvars_;
    std::map<ExponentVector, LambdaPolynomial> terms_;
};

XPoly xp_mul(const XPoly& a, const XPoly& b, long cap = kNoCap);
XPoly xp_pow(const XPoly& a, long n, long cap = kNoCap);

// Determinant by cofactor expansion (matrices here are at most 3x3).
XPoly xp_det(const std::vector<std::vector<XPoly>>& m, long cap = kNoCap);

// Exact division of f by (x_u - x_v); throws nonzero_remainder if not divisible.
XPoly xp_divide_var_difference(const XPoly& f, int u, int v, long cap = kNoCap);

}  // namespace telsigma
