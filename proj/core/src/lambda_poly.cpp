#include "telsigma/lambda_poly.hpp"

#include <algorithm>

#include "telsigma/errors.hpp"

namespace telsigma {

std::uint32_t LambdaMonomial::multiplicity_of(std::uint32_t id) const {
    for (const auto& [s, mult] : factors)
        if (s == id)
            return mult;
    return 0;
}

LambdaMonomial mono_mul(const LambdaMonomial& a, const LambdaMonomial& b) {
    LambdaMonomial r;
    r.factors.reserve(a.factors.size() + b.factors.size());
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first < b.factors[j].first)
            r.factors.push_back(a.factors[i++]);
        else if (a.factors[i].first > b.factors[j].first)
            r.factors.push_back(b.factors[j++]);
        else {
            r.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
            ++i;
            ++j;
        }
    }
    r.factors.insert(r.factors.end(), a.factors.begin() + static_cast<long>(i), a.factors.end());
    r.factors.insert(r.factors.end(), b.factors.begin() + static_cast<long>(j), b.factors.end());
    r.weight = a.weight + b.weight;
    return r;
}

LambdaPolynomial LambdaPolynomial::constant(const Rational& c) {
    LambdaPolynomial p;
    if (c != 0)
        p.terms_.emplace(LambdaMonomial{}, c);
    return p;
}

LambdaPolynomial LambdaPolynomial::symbol(std::uint32_t id, long weight) {
    LambdaMonomial m;
    m.factors.emplace_back(id, 1);
    m.weight = weight;
    LambdaPolynomial p;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

LambdaPolynomial LambdaPolynomial::term(const LambdaMonomial& m, const Rational& c) {
    LambdaPolynomial p;
    if (c != 0)
        p.terms_.emplace(m, c);
    return p;
}

Rational LambdaPolynomial::constant_part() const {
    auto it = terms_.find(LambdaMonomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LambdaPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void LambdaPolynomial::add_term(const LambdaMonomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LambdaPolynomial& LambdaPolynomial::operator+=(const LambdaPolynomial& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

LambdaPolynomial& LambdaPolynomial::operator-=(const LambdaPolynomial& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

LambdaPolynomial LambdaPolynomial::operator-() const {
    LambdaPolynomial r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

LambdaPolynomial LambdaPolynomial::scaled(const Rational& c) const {
    LambdaPolynomial r;
    if (c == 0)
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_.emplace(m, v * c);
    return r;
}

bool LambdaPolynomial::is_homogeneous(long* weight) const {
    if (terms_.empty()) {
        if (weight)
            *weight = 0;
        return true;
    }
    long w = terms_.begin()->first.weight;
    for (const auto& [m, c] : terms_)
        if (m.weight != w)
            return false;
    if (weight)
        *weight = w;
    return true;
}

long LambdaPolynomial::min_weight() const {
    long w = kNoCap;
    for (const auto& [m, c] : terms_)
        w = std::min(w, m.weight);
    return w;
}

long LambdaPolynomial::max_weight() const {
    long w = -1;
    for (const auto& [m, c] : terms_)
        w = std::max(w, m.weight);
    return w;
}

LambdaPolynomial LambdaPolynomial::homogeneous_part(long weight) const {
    LambdaPolynomial r;
    for (const auto& [m, c] : terms_)
        if (m.weight == weight)
            r.terms_.emplace(m, c);
    return r;
}

LambdaPolynomial LambdaPolynomial::substitute(const std::map<std::uint32_t, Rational>& values,
                                              const std::vector<LambdaSymbol>& catalog) const {
    LambdaPolynomial r;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        LambdaMonomial rest;
        bool dead = false;
        for (const auto& [id, mult] : m.factors) {
            auto it = values.find(id);
            if (it == values.end()) {
                rest.factors.emplace_back(id, mult);
                rest.weight += catalog[id].weight * static_cast<long>(mult);
                continue;
            }
            if (it->second == 0) {
                dead = true;
                break;
            }
            for (std::uint32_t k = 0; k < mult; ++k)
                coeff *= it->second;
        }
        if (!dead)
            r.add_term(rest, coeff);
    }
    return r;
}

void LambdaPolynomial::for_each(
    const std::function<void(const LambdaMonomial&, const Rational&)>& f) const {
    for (const auto& [m, c] : terms_)
        f(m, c);
}

LambdaPolynomial lp_mul(const LambdaPolynomial& a, const LambdaPolynomial& b, long cap) {
    LambdaPolynomial r;
    if (a.is_zero() || b.is_zero())
        return r;
    if (a.min_weight() + b.min_weight() > cap)
        return r;
    // Collect, sort, then combine: cheaper than map insertion per pair.
    std::vector<std::pair<LambdaMonomial, Rational>> acc;
    acc.reserve(a.term_count() * b.term_count());
    for (const auto& [ma, ca] : a.terms()) {
        if (ma.weight + b.min_weight() > cap)
            continue;
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.weight + mb.weight > cap)
                continue;
            acc.emplace_back(mono_mul(ma, mb), ca * cb);
        }
    }
    std::sort(acc.begin(), acc.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [m, c] : acc)
        r.add_term(m, c);
    return r;
}

LambdaPolynomial lp_pow(const LambdaPolynomial& a, unsigned long n, long cap) {
    LambdaPolynomial r = LambdaPolynomial::constant(1);
    LambdaPolynomial base = a;
    while (n > 0) {
        if (n & 1)
            r = lp_mul(r, base, cap);
        n >>= 1;
        if (n)
            base = lp_mul(base, base, cap);
    }
    return r;
}

}  // namespace telsigma
