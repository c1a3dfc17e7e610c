#pragma once

#include <optional>
#include <string>
#include <vector>

#include "telsigma/lambda_poly.hpp"

namespace telsigma {

// Global grading audit: when enabled, every series construction re-checks that
// stored coefficients are homogeneous of the declared weight.
namespace audit {
bool enabled();
void set_enabled(bool on);
}  // namespace audit

// Truncated Laurent series in t over LambdaPolynomial.
//
// A series carries the ambient weight cap (quotient by monomials of weight
// > cap) and, when it represents a jointly homogeneous quantity, its grade:
// the coefficient at exponent e is homogeneous of weight e + grade. Reads
// beyond the stored window succeed with 0 when the tail is provably zero
// (exact polynomial tail, or weight above the cap); otherwise they throw
// truncation_exceeded. Results always carry the tightest valid window.
class TSeries {
public:
    TSeries() = default;

    static TSeries zero(long cap);
    static TSeries monomial(long exp, const LambdaPolynomial& c, std::optional<long> grade, long cap);
    static TSeries make(long min_exp, std::vector<LambdaPolynomial> coeffs,
                        std::optional<long> grade, long cap, bool exact_tail);

    long cap() const { return cap_; }
    std::optional<long> grade() const { return grade_; }
    long min_exp() const { return min_exp_; }
    long window_end() const { return min_exp_ + static_cast<long>(c_.size()) - 1; }
    bool exact_tail() const { return exact_tail_; }

    // Exponent of the lowest nonzero stored coefficient (nullopt if none).
    std::optional<long> valuation() const;
    bool is_zero() const;

    const LambdaPolynomial& coeff(long e) const;
    bool readable(long e) const;

    TSeries& operator+=(const TSeries& o);
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    TSeries operator-() const;
    friend TSeries operator-(TSeries a, const TSeries& b) { return a += -b; }

    TSeries shifted(long k) const;          // multiply by t^k
    TSeries scaled(const Rational& c) const;
    TSeries derivative() const;             // d/dt
    // Restrict the stored window to exponents <= e (validity metadata kept).
    TSeries truncated(long e) const;

    std::string to_string(int max_terms = 12) const;

private:
    friend TSeries ts_mul(const TSeries&, const TSeries&);
    friend TSeries ts_mul_poly(const TSeries&, const LambdaPolynomial&);
    friend TSeries ts_inverse(const TSeries&);

    // Knowledge horizon: last exponent whose coefficient is determined
    // (kNoCap when the tail is exact).
    long coverage() const { return exact_tail_ ? kNoCap : window_end(); }
    void check_grading(const char* where) const;

    long min_exp_ = 0;
    std::optional<long> grade_;
    long cap_ = kNoCap;
    bool exact_tail_ = true;
    std::vector<LambdaPolynomial> c_;
};

TSeries ts_mul(const TSeries& a, const TSeries& b);
TSeries ts_mul_poly(const TSeries& a, const LambdaPolynomial& p);  // p must be homogeneous
TSeries ts_pow(const TSeries& a, long n);                          // n >= 0
// Multiplicative inverse; requires the lowest nonzero coefficient to be a
// nonzero rational constant.
TSeries ts_inverse(const TSeries& a);
TSeries ts_divide(const TSeries& a, const TSeries& b);

// Equality of all coefficients up to exponent e (both sides must cover it).
bool ts_equal_up_to(const TSeries& a, const TSeries& b, long e);

}  // namespace telsigma
