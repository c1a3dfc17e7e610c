#include "telsigma/schur.hpp"

#include <algorithm>
#include <numeric>

#include "telsigma/errors.hpp"

namespace telsigma {

std::vector<Partition> partitions_up_to(long bound) {
    std::vector<Partition> out;
    Partition cur;
    // Depth-first with a largest-part ceiling; parts are appended descending.
    std::function<void(long, long)> rec = [&](long remaining, long max_part) {
        out.push_back(cur);
        for (long part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(bound, bound);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        long sa = std::accumulate(a.begin(), a.end(), 0L);
        long sb = std::accumulate(b.begin(), b.end(), 0L);
        if (sa != sb)
            return sa < sb;
        return a < b;
    });
    return out;
}

USeries p_restricted(const std::vector<long>& gaps, long n, long bound, long cap) {
    USeries r(gaps, bound, cap);
    if (n < 0)
        return r;
    const size_t g = gaps.size();
    std::vector<long> exps(g, 0);
    std::function<void(size_t, long, Rational)> rec = [&](size_t i, long remaining, Rational inv) {
        if (i == g) {
            if (remaining == 0)
                r.add_term(exps, LambdaPolynomial::constant(inv));
            return;
        }
        Rational step = inv;
        for (long k = 0; k * gaps[i] <= remaining; ++k) {
            exps[i] = k;
            rec(i + 1, remaining - k * gaps[i], step);
            step /= (k + 1);
        }
        exps[i] = 0;
    };
    rec(0, n, Rational(1));
    return r;
}

SchurContext::SchurContext(std::vector<long> gaps, long bound, long cap)
    : gaps_(std::move(gaps)), bound_(bound), cap_(cap) {}

const USeries& SchurContext::p(long n) {
    auto it = p_memo_.find(n);
    if (it != p_memo_.end())
        return it->second;
    USeries v = (n > bound_) ? USeries(gaps_, bound_, cap_)  // pure weight n: truncates to zero
                             : p_restricted(gaps_, n, bound_, cap_);
    return p_memo_.emplace(n, std::move(v)).first->second;
}

const USeries& SchurContext::schur(const Partition& mu) {
    auto it = s_memo_.find(mu);
    if (it != s_memo_.end())
        return it->second;

    USeries v(gaps_, bound_, cap_);
    long total = std::accumulate(mu.begin(), mu.end(), 0L);
    if (total > bound_) {
        // Concentrated in weighted degree |mu| > bound: identically zero here.
    } else if (mu.empty()) {
        v = USeries::constant(gaps_, bound_, cap_, 1);
    } else {
        // Expand the Jacobi-Trudi determinant along its first column. The
        // minor for row i is the Jacobi-Trudi matrix of
        // (mu_1+1, ..., mu_{i-1}+1, mu_{i+1}, ..., mu_l).
        const size_t l = mu.size();
        for (size_t i = 0; i < l; ++i) {
            long entry = mu[i] - static_cast<long>(i + 1) + 1;
            if (entry < 0)
                continue;
            const USeries& h = p(entry);
            if (h.is_zero() && entry != 0)
                continue;
            Partition rest;
            rest.reserve(l - 1);
            for (size_t k = 0; k < i; ++k)
                rest.push_back(mu[k] + 1);
            for (size_t k = i + 1; k < l; ++k)
                rest.push_back(mu[k]);
            USeries term = us_mul(h, schur(rest));
            if (i % 2 == 0)
                v += term;
            else
                v -= term;
        }
    }
    return s_memo_.emplace(mu, std::move(v)).first->second;
}

USeries schur_function(const std::vector<long>& gaps, const Partition& mu, long bound, long cap) {
    SchurContext ctx(gaps, bound, cap);
    return ctx.schur(mu);
}

}  // namespace telsigma
