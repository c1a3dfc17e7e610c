#include "telsigma/rational.hpp"

namespace telsigma {

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

bool is_integer_after_doubling(const Rational& r, unsigned long k) {
    // den is a positive reduced denominator; r * 2^k integral iff den | 2^k.
    const Int& den = r.get_den();
    if (den == 1)
        return true;
    unsigned long two = mpz_scan1(den.get_mpz_t(), 0);  // v_2(den)
    Int odd = den >> two;
    return odd == 1 && two <= k;
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rational> rational_from_string(const std::string& s) {
    if (s.empty())
        return std::nullopt;
    // Accept "p" or "p/q" with q > 0; reject anything mpq can't parse fully.
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        return std::nullopt;
    if (r.get_den() == 0)
        return std::nullopt;
    r.canonicalize();
    return r;
}

}  // namespace telsigma
