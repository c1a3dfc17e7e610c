#include "telsigma/useries.hpp"

#include <algorithm>

#include "telsigma/errors.hpp"

namespace telsigma {

namespace {
const LambdaPolynomial kZeroPoly;
}

USeries::USeries(std::vector<long> weights, long bound, long cap)
    : weights_(std::move(weights)), bound_(bound), cap_(cap) {}

USeries USeries::constant(std::vector<long> weights, long bound, long cap, const Rational& c) {
    USeries s(std::move(weights), bound, cap);
    if (c != 0)
        s.terms_.emplace(std::vector<long>(s.weights_.size(), 0), LambdaPolynomial::constant(c));
    return s;
}

long USeries::u_weight(const std::vector<long>& n) const {
    long w = 0;
    for (size_t i = 0; i < weights_.size(); ++i)
        w += weights_[i] * n[i];
    return w;
}

const LambdaPolynomial& USeries::coeff(const std::vector<long>& n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? kZeroPoly : it->second;
}

Int USeries::hurwitz_factor(const std::vector<long>& n) const {
    Int f = 1;
    for (long k : n)
        f *= factorial(static_cast<unsigned long>(k));
    return f;
}

LambdaPolynomial USeries::hurwitz_coeff(const std::vector<long>& n) const {
    return coeff(n).scaled(Rational(hurwitz_factor(n)));
}

void USeries::add_term(const std::vector<long>& n, const LambdaPolynomial& c) {
    if (c.is_zero() || u_weight(n) > bound_)
        return;
    auto [it, inserted] = terms_.emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void USeries::truncate_self() {
    for (auto it = terms_.begin(); it != terms_.end();)
        if (u_weight(it->first) > bound_)
            it = terms_.erase(it);
        else
            ++it;
}

USeries& USeries::operator+=(const USeries& o) {
    if (weights_.empty()) {  // default-constructed accumulator adopts o's frame
        weights_ = o.weights_;
        bound_ = o.bound_;
        cap_ = o.cap_;
    }
    bound_ = std::min(bound_, o.bound_);
    for (const auto& [n, c] : o.terms_)
        add_term(n, c);
    truncate_self();
    return *this;
}

USeries& USeries::operator-=(const USeries& o) {
    bound_ = std::min(bound_, o.bound_);
    for (const auto& [n, c] : o.terms_)
        add_term(n, -c);
    truncate_self();
    return *this;
}

USeries USeries::operator-() const {
    USeries r(weights_, bound_, cap_);
    for (const auto& [n, c] : terms_)
        r.terms_.emplace(n, -c);
    return r;
}

USeries USeries::scaled(const Rational& c) const {
    USeries r(weights_, bound_, cap_);
    if (c == 0)
        return r;
    for (const auto& [n, v] : terms_)
        r.terms_.emplace(n, v.scaled(c));
    return r;
}

USeries USeries::scaled_poly(const LambdaPolynomial& p) const {
    USeries r(weights_, bound_, cap_);
    for (const auto& [n, v] : terms_) {
        auto c = lp_mul(v, p, cap_);
        if (!c.is_zero())
            r.terms_.emplace(n, std::move(c));
    }
    return r;
}

USeries USeries::truncated(long w) const {
    USeries r(weights_, std::min(bound_, w), cap_);
    for (const auto& [n, c] : terms_)
        if (u_weight(n) <= w)
            r.terms_.emplace(n, c);
    return r;
}

USeries USeries::weight_part(long w) const {
    USeries r(weights_, bound_, cap_);
    for (const auto& [n, c] : terms_)
        if (u_weight(n) == w)
            r.terms_.emplace(n, c);
    return r;
}

long USeries::min_u_weight() const {
    long w = kNoCap;
    for (const auto& [n, c] : terms_)
        w = std::min(w, u_weight(n));
    return w;
}

USeries us_mul(const USeries& a, const USeries& b) {
    USeries r(a.weights(), std::min(a.bound(), b.bound()), a.cap());
    for (const auto& [na, ca] : a.terms()) {
        long wa = r.u_weight(na);
        if (wa > r.bound())
            continue;
        for (const auto& [nb, cb] : b.terms()) {
            long w = wa + r.u_weight(nb);
            if (w > r.bound())
                continue;
            auto c = lp_mul(ca, cb, r.cap());
            if (c.is_zero())
                continue;
            std::vector<long> n(na.size());
            for (size_t i = 0; i < n.size(); ++i)
                n[i] = na[i] + nb[i];
            r.add_term(n, c);
        }
    }
    return r;
}

USeries us_pow(const USeries& a, long n) {
    USeries r = USeries::constant(a.weights(), a.bound(), a.cap(), 1);
    USeries base = a;
    while (n > 0) {
        if (n & 1)
            r = us_mul(r, base);
        n >>= 1;
        if (n)
            base = us_mul(base, base);
    }
    return r;
}

USeries us_exp(const USeries& s) {
    USeries r = USeries::constant(s.weights(), s.bound(), s.cap(), 1);
    for (const auto& [n, c] : s.terms()) {
        long w = s.u_weight(n);
        require(w > 0, pipeline_error::kind::window_exceeded,
                "us_exp needs a series without constant term");
        // exp(c u^n) = sum_k c^k u^{kn} / k!
        USeries factor = USeries::constant(s.weights(), s.bound(), s.cap(), 1);
        LambdaPolynomial ck = LambdaPolynomial::constant(1);
        Rational inv_fact(1);
        std::vector<long> kn(n.size(), 0);
        for (long k = 1; k * w <= s.bound(); ++k) {
            ck = lp_mul(ck, c, s.cap());
            if (ck.is_zero())
                break;
            inv_fact /= k;
            for (size_t i = 0; i < n.size(); ++i)
                kn[i] += n[i];
            factor.add_term(kn, ck.scaled(inv_fact));
        }
        r = us_mul(r, factor);
    }
    return r;
}

USeries us_substitute_linear(const USeries& s,
                             const std::vector<std::vector<LambdaPolynomial>>& m) {
    const size_t g = s.nvars();
    // Images of the variables as degree-one series.
    std::vector<USeries> image;
    image.reserve(g);
    for (size_t i = 0; i < g; ++i) {
        USeries v(s.weights(), s.bound(), s.cap());
        for (size_t j = 0; j < g; ++j) {
            if (m[i][j].is_zero())
                continue;
            std::vector<long> e(g, 0);
            e[j] = 1;
            v.add_term(e, m[i][j]);
        }
        image.push_back(std::move(v));
    }
    USeries r(s.weights(), s.bound(), s.cap());
    for (const auto& [n, c] : s.terms()) {
        USeries term = USeries::constant(s.weights(), s.bound(), s.cap(), 1);
        for (size_t i = 0; i < g; ++i)
            if (n[i] > 0)
                term = us_mul(term, us_pow(image[i], n[i]));
        r += term.scaled_poly(c);
    }
    return r;
}

}  // namespace telsigma
