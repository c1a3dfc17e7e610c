#include "telsigma/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "telsigma/errors.hpp"

namespace telsigma {

std::string LambdaSymbol::name() const {
    std::ostringstream os;
    os << eq_index << ":";
    for (size_t k = 0; k < exponents.size(); ++k) {
        if (k)
            os << ",";
        os << exponents[k];
    }
    return os.str();
}

namespace {

long gcd_long(long a, long b) {
    return std::gcd(a, b);
}

// Bounded membership sieve for <gens> up to `limit` inclusive.
std::vector<char> member_sieve(const std::vector<long>& gens, long limit) {
    std::vector<char> s(static_cast<size_t>(limit) + 1, 0);
    s[0] = 1;
    for (long v = 1; v <= limit; ++v)
        for (long g : gens)
            if (g <= v && s[static_cast<size_t>(v - g)]) {
                s[static_cast<size_t>(v)] = 1;
                break;
            }
    return s;
}

// Modular inverse of x mod n (n >= 1, gcd(x, n) = 1).
long mod_inverse(long x, long n) {
    if (n == 1)
        return 0;
    long r0 = n, r1 = ((x % n) + n) % n, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    return ((s0 % n) + n) % n;
}

}  // namespace

TelescopicData TelescopicData::validate(const std::vector<long>& a) {
    const int m = static_cast<int>(a.size());
    if (m < 2)
        throw validation_error("sequence must have at least two entries");
    for (long v : a)
        if (v < 1)
            throw validation_error("entries must be positive");

    long g = 0;
    for (long v : a)
        g = gcd_long(g, v);
    if (g != 1)
        throw validation_error("NotCoprime: gcd of the sequence is " + std::to_string(g));
    for (int i = 0; i < m; ++i)
        if (a[i] < 2)
            throw validation_error("EntryTooSmall: a_" + std::to_string(i + 1) + " = " +
                                   std::to_string(a[i]) + " < 2");

    TelescopicData td;
    td.a_ = a;
    td.d_.resize(m);
    td.d_[0] = a[0];
    for (int i = 1; i < m; ++i)
        td.d_[i] = gcd_long(td.d_[i - 1], a[i]);

    td.bound_.assign(m, 0);
    for (int i = 1; i < m; ++i)
        td.bound_[i] = td.d_[i - 1] / td.d_[i];

    // Telescopic condition: a_i/d_i lies in the semigroup generated by the
    // previous entries scaled by d_{i-1}. Decided by a bounded sieve.
    for (int i = 1; i < m; ++i) {
        long target = a[i] / td.d_[i];
        std::vector<long> gens;
        for (int j = 0; j < i; ++j)
            gens.push_back(a[j] / td.d_[i - 1]);
        auto s = member_sieve(gens, target);
        if (!s[static_cast<size_t>(target)])
            throw validation_error("NotTelescopic: condition fails at i = " + std::to_string(i + 1));
    }

    // Genus formula, then sieve the semigroup far enough for every consumer:
    // gaps live below 2g, the lambda catalog below max a_i d_{i-1}/d_i, and the
    // bilinear tables reference orders up to 2(2g-1+a_1) plus small shifts.
    long twice = 1 - a[0];
    for (int i = 1; i < m; ++i)
        twice += (td.bound_[i] - 1) * a[i];
    if (twice < 0 || twice % 2 != 0)
        throw validation_error("genus formula produced a non-integer; sequence invalid");
    td.genus_ = twice / 2;

    long sieve_bound = 4 * td.genus_ + 4;
    for (int i = 1; i < m; ++i)
        sieve_bound = std::max(sieve_bound, a[i] * td.bound_[i] + 1);
    sieve_bound = std::max(sieve_bound, 2 * (2 * td.genus_ - 1 + a[0]) + 4 * a[0] + 8);
    td.sieve_ = member_sieve(a, sieve_bound);

    for (long v = 0; v < 2 * td.genus_; ++v)
        if (!td.sieve_[static_cast<size_t>(v)])
            td.gaps_.push_back(v);
    if (static_cast<long>(td.gaps_.size()) != td.genus_)
        throw validation_error("gap count disagrees with the genus formula");
    if (td.genus_ >= 1 && td.gaps_.back() != 2 * td.genus_ - 1)
        throw validation_error("largest gap is not 2g-1");

    td.mu_.resize(td.genus_);
    for (long i = 0; i < td.genus_; ++i)
        td.mu_[i] = td.gaps_[static_cast<size_t>(td.genus_ - 1 - i)] - (td.genus_ - 1 - i);
    for (size_t i = 0; i + 1 < td.mu_.size(); ++i)
        if (td.mu_[i] < td.mu_[i + 1])
            throw validation_error("mu(A_m) is not weakly decreasing");
    while (!td.mu_.empty() && td.mu_.back() == 0)
        td.mu_.pop_back();

    // ell rows from the canonical representation of a_i d_{i-1}/d_i.
    td.ell_.resize(m);
    for (int i = 1; i < m; ++i) {
        auto rep = td.canonical_rep(a[i] * td.bound_[i]);
        if (!rep)
            throw validation_error("ell row missing at i = " + std::to_string(i + 1));
        for (int j = i; j < m; ++j)
            if ((*rep)[j] != 0)
                throw validation_error("ell_{i,j} != 0 for j >= i");
        td.ell_[i] = *rep;
    }

    // Admissible symbol catalog: per equation i, all B(A_m) exponents of order
    // below a_i d_{i-1}/d_i, listed by descending weight (ascending order).
    // This ordering is part of the public file contract.
    for (int i = 1; i < m; ++i) {
        long degree = a[i] * td.bound_[i];
        for (long o = 0; o < degree; ++o) {
            auto rep = td.canonical_rep(o);
            if (!rep)
                continue;
            LambdaSymbol sym;
            sym.eq_index = i + 1;
            sym.exponents = *rep;
            sym.weight = degree - o;
            td.catalog_.push_back(std::move(sym));
        }
    }
    return td;
}

bool TelescopicData::in_b_set(const ExponentVector& e) const {
    if (static_cast<int>(e.size()) != m())
        return false;
    if (e[0] < 0)
        return false;
    for (int i = 1; i < m(); ++i)
        if (e[i] < 0 || e[i] > bound_[i] - 1)
            return false;
    return true;
}

long TelescopicData::order_of(const ExponentVector& e) const {
    long o = 0;
    for (int i = 0; i < m(); ++i)
        o += a_[i] * e[i];
    return o;
}

bool TelescopicData::in_semigroup(long v) const {
    if (v < 0)
        return false;
    if (v < static_cast<long>(sieve_.size()))
        return sieve_[static_cast<size_t>(v)] != 0;
    return v >= 2 * genus_;  // conductor is at most 2g
}

std::optional<ExponentVector> TelescopicData::canonical_rep(long v) const {
    if (v < 0)
        return std::nullopt;
    ExponentVector k(m(), 0);
    // Back to front: k_i is determined mod d_{i-1}/d_i, then peel it off.
    for (int i = m() - 1; i >= 1; --i) {
        long n = bound_[i];
        long vi = v / d_[i];  // v divisible by d_i by construction
        long ai = a_[i] / d_[i];
        long r = ((vi % n) * mod_inverse(ai, n)) % n;
        k[i] = r;
        v -= a_[i] * r;
        if (v < 0)
            return std::nullopt;
    }
    if (v % a_[0] != 0)
        return std::nullopt;  // unreachable when gcd bookkeeping is right
    k[0] = v / a_[0];
    return k;
}

std::vector<ExponentVector> TelescopicData::phi_basis(long n) const {
    std::vector<ExponentVector> basis;
    basis.reserve(static_cast<size_t>(n));
    for (long o = 0; static_cast<long>(basis.size()) < n; ++o) {
        if (!in_semigroup(o))
            continue;
        auto rep = canonical_rep(o);
        require(rep.has_value(), pipeline_error::kind::window_exceeded,
                "canonical representative missing for non-gap order");
        basis.push_back(*rep);
    }
    return basis;
}

long TelescopicData::phi_order(long index) const {
    long count = 0;
    for (long o = 0;; ++o)
        if (in_semigroup(o) && ++count == index)
            return o;
}

std::optional<long> TelescopicData::phi_index_of_order(long o) const {
    if (!in_semigroup(o))
        return std::nullopt;
    long count = 0;
    for (long v = 0; v <= o; ++v)
        if (in_semigroup(v))
            ++count;
    return count;
}

std::uint32_t TelescopicData::symbol_id(int eq_index, const ExponentVector& exponents) const {
    auto id = find_symbol(eq_index, exponents);
    if (!id)
        throw validation_error("unknown lambda symbol " + std::to_string(eq_index));
    return *id;
}

std::optional<std::uint32_t> TelescopicData::find_symbol(int eq_index,
                                                         const ExponentVector& exponents) const {
    for (std::uint32_t i = 0; i < catalog_.size(); ++i)
        if (catalog_[i].eq_index == eq_index && catalog_[i].exponents == exponents)
            return i;
    return std::nullopt;
}

}  // namespace telsigma
