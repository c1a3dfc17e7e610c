#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace telsigma {

// Exact arithmetic everywhere; GMP keeps numerators/denominators canonical
// (den > 0, gcd = 1), which is exactly the invariant the coefficient type needs.
using Int = mpz_class;
using Rational = mpq_class;

bool is_integer(const Rational& r);

// True iff r * 2^k is an integer. Decides membership of a single coefficient
// in rings where k symbols of its monomial were halved.
bool is_integer_after_doubling(const Rational& r, unsigned long k);

Int factorial(unsigned long n);

// Canonical rendering: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string rational_to_string(const Rational& r);
std::optional<Rational> rational_from_string(const std::string& s);

}  // namespace telsigma
