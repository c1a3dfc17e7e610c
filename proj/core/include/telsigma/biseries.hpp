#pragma once

#include <map>
#include <optional>
#include <utility>

#include "telsigma/tseries.hpp"

namespace telsigma {

// Truncated bi-Laurent series in (t_P, t_Q) over LambdaPolynomial.
//
// Validity is tracked by a region: exponent floors (min_p, min_q) plus a
// total-degree horizon. When graded (coefficient at (i,j) homogeneous of
// weight i + j + grade), everything above the weight cap is identified with
// zero, which is what lets the diagonal division sweeps terminate.
class BiSeries {
public:
    BiSeries() = default;

    static BiSeries zero(long cap);
    static BiSeries monomial(long i, long j, const LambdaPolynomial& c, std::optional<long> grade,
                             long cap);
    // f(t_P) * g(t_Q)
    static BiSeries separable(const TSeries& f, const TSeries& g);

    long cap() const { return cap_; }
    std::optional<long> grade() const { return grade_; }
    long min_p() const { return min_p_; }
    long min_q() const { return min_q_; }
    // Last total degree whose coefficients are all determined.
    long horizon() const { return exact_ ? kNoCap : valid_total_; }
    bool exact_beyond() const { return exact_; }

    const LambdaPolynomial& coeff(long i, long j) const;
    const std::map<std::pair<long, long>, LambdaPolynomial>& entries() const { return c_; }

    BiSeries& operator+=(const BiSeries& o);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    BiSeries operator-() const;
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a += -b; }

    BiSeries transposed() const;
    bool is_symmetric() const;
    BiSeries shifted(long dp, long dq) const;
    bool is_zero() const;

private:
    friend BiSeries bs_mul(const BiSeries&, const BiSeries&);
    friend BiSeries bs_divide_diagonal(const BiSeries&);
    friend BiSeries bs_divide_exact(const BiSeries&, const BiSeries&);

    void set_coeff(long i, long j, LambdaPolynomial v);
    void check_grading(const char* where) const;
    void clamp_to_cap();

    long cap_ = kNoCap;
    std::optional<long> grade_;
    long min_p_ = 0, min_q_ = 0;
    long valid_total_ = -1;  // inclusive bound on i+j for stored knowledge
    bool exact_ = true;      // everything beyond valid_total_ is zero (mod cap ideal)
    std::map<std::pair<long, long>, LambdaPolynomial> c_;
};

BiSeries bs_mul(const BiSeries& a, const BiSeries& b);
BiSeries bs_mul_p(const BiSeries& a, const TSeries& f);  // multiply by f(t_P)
BiSeries bs_mul_q(const BiSeries& a, const TSeries& g);  // multiply by g(t_Q)

// Exact quotient by (t_P - t_Q); the remainder is recomposed and asserted zero.
BiSeries bs_divide_diagonal(const BiSeries& s);

// Exact quotient by a divisor whose lowest total-degree form has a rational
// unit at its smallest first-exponent slot (the pivot). Solved by total degree
// then first exponent; the product is recomposed and asserted equal.
BiSeries bs_divide_exact(const BiSeries& numer, const BiSeries& denom);

bool bs_equal_up_to(const BiSeries& a, const BiSeries& b, long total);

}  // namespace telsigma
