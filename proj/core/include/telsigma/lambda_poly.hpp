#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "telsigma/rational.hpp"
#include "telsigma/semigroup.hpp"

namespace telsigma {

// Products modulo the ideal of weight > cap; kNoCap disables the quotient.
inline constexpr long kNoCap = std::numeric_limits<long>::max() / 4;

// Power product of catalog symbols, sorted by symbol id. The total weight is
// cached so capped multiplication never needs the catalog.
struct LambdaMonomial {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (id, multiplicity)
    long weight = 0;

    bool operator==(const LambdaMonomial& o) const { return factors == o.factors; }
    auto operator<=>(const LambdaMonomial& o) const { return factors <=> o.factors; }
    bool empty() const { return factors.empty(); }
    std::uint32_t multiplicity_of(std::uint32_t id) const;
};

LambdaMonomial mono_mul(const LambdaMonomial& a, const LambdaMonomial& b);

// Sparse polynomial in the lambda symbols over exact rationals. Zero
// coefficients are never stored; map order gives the canonical term order.
class LambdaPolynomial {
public:
    LambdaPolynomial() = default;
    static LambdaPolynomial constant(const Rational& c);
    static LambdaPolynomial symbol(std::uint32_t id, long weight);
    static LambdaPolynomial term(const LambdaMonomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<LambdaMonomial, Rational>& terms() const { return terms_; }

    // Constant part (possibly 0); is_constant() means no symbol appears at all.
    Rational constant_part() const;
    bool is_constant() const;

    void add_term(const LambdaMonomial& m, const Rational& c);
    LambdaPolynomial& operator+=(const LambdaPolynomial& o);
    LambdaPolynomial& operator-=(const LambdaPolynomial& o);
    friend LambdaPolynomial operator+(LambdaPolynomial a, const LambdaPolynomial& b) { return a += b; }
    friend LambdaPolynomial operator-(LambdaPolynomial a, const LambdaPolynomial& b) { return a -= b; }
    LambdaPolynomial operator-() const;
    bool operator==(const LambdaPolynomial& o) const { return terms_ == o.terms_; }

    LambdaPolynomial scaled(const Rational& c) const;

    // Homogeneity: nonzero weight-w polynomials report w; zero reports any.
    bool is_homogeneous(long* weight = nullptr) const;
    long min_weight() const;  // kNoCap when zero
    long max_weight() const;  // -1 when zero
    LambdaPolynomial homogeneous_part(long weight) const;

    // Replace listed symbols by rational values (weights from the catalog).
    LambdaPolynomial substitute(const std::map<std::uint32_t, Rational>& values,
                                const std::vector<LambdaSymbol>& catalog) const;

    void for_each(const std::function<void(const LambdaMonomial&, const Rational&)>& f) const;

private:
    std::map<LambdaMonomial, Rational> terms_;
};

LambdaPolynomial lp_mul(const LambdaPolynomial& a, const LambdaPolynomial& b, long cap = kNoCap);
LambdaPolynomial lp_pow(const LambdaPolynomial& a, unsigned long n, long cap = kNoCap);

}  // namespace telsigma
