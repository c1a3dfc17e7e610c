#include "telsigma/xpoly.hpp"

#include <algorithm>

#include "telsigma/errors.hpp"

namespace telsigma {

namespace {
const LambdaPolynomial kZeroPoly;
}

XPoly XPoly::constant(int nvars, const LambdaPolynomial& c) {
    XPoly p(nvars);
    if (!c.is_zero())
        p.terms_.emplace(ExponentVector(static_cast<size_t>(nvars), 0), c);
    return p;
}

XPoly XPoly::variable(int nvars, int var) {
    ExponentVector e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(var)] = 1;
    XPoly p(nvars);
    p.terms_.emplace(std::move(e), LambdaPolynomial::constant(1));
    return p;
}

XPoly XPoly::monomial(const ExponentVector& e, const LambdaPolynomial& c) {
    XPoly p(static_cast<int>(e.size()));
    if (!c.is_zero())
        p.terms_.emplace(e, c);
    return p;
}

const LambdaPolynomial& XPoly::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? kZeroPoly : it->second;
}

void XPoly::add_term(const ExponentVector& e, const LambdaPolynomial& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

XPoly& XPoly::operator+=(const XPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

XPoly XPoly::operator-() const {
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

XPoly XPoly::scaled(const LambdaPolynomial& c, long cap) const {
    XPoly r(nvars_);
    for (const auto& [e, v] : terms_) {
        auto p = lp_mul(v, c, cap);
        if (!p.is_zero())
            r.terms_.emplace(e, std::move(p));
    }
    return r;
}

XPoly XPoly::derivative(int var) const {
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        long k = e[static_cast<size_t>(var)];
        if (k == 0)
            continue;
        ExponentVector e2 = e;
        e2[static_cast<size_t>(var)] -= 1;
        r.add_term(e2, c.scaled(Rational(k)));
    }
    return r;
}

XPoly XPoly::renamed(const std::vector<int>& renaming, int new_nvars) const {
    XPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        ExponentVector e2(static_cast<size_t>(new_nvars), 0);
        for (size_t v = 0; v < e.size(); ++v)
            e2[static_cast<size_t>(renaming[v])] += e[v];
        r.add_term(e2, c);
    }
    return r;
}

bool XPoly::is_jointly_homogeneous(const std::vector<long>& var_weights, long* degree) const {
    bool first = true;
    long deg = 0;
    for (const auto& [e, c] : terms_) {
        long w;
        if (!c.is_homogeneous(&w))
            return false;
        for (size_t v = 0; v < e.size(); ++v)
            w += var_weights[v] * e[v];
        if (first) {
            deg = w;
            first = false;
        } else if (w != deg) {
            return false;
        }
    }
    if (degree)
        *degree = first ? 0 : deg;
    return true;
}

long XPoly::joint_degree_max(const std::vector<long>& var_weights) const {
    long deg = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long w = c.max_weight();
        if (w < 0)
            continue;
        for (size_t v = 0; v < e.size(); ++v)
            w += var_weights[v] * e[v];
        deg = first ? w : std::max(deg, w);
        first = false;
    }
    return deg;
}

XPoly xp_mul(const XPoly& a, const XPoly& b, long cap) {
    XPoly r(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            auto c = lp_mul(ca, cb, cap);
            if (c.is_zero())
                continue;
            ExponentVector e = ea;
            for (size_t v = 0; v < e.size(); ++v)
                e[v] += eb[v];
            r.add_term(e, c);
        }
    return r;
}

XPoly xp_pow(const XPoly& a, long n, long cap) {
    XPoly r = XPoly::constant(a.nvars(), LambdaPolynomial::constant(1));
    XPoly base = a;
    while (n > 0) {
        if (n & 1)
            r = xp_mul(r, base, cap);
        n >>= 1;
        if (n)
            base = xp_mul(base, base, cap);
    }
    return r;
}

XPoly xp_det(const std::vector<std::vector<XPoly>>& m, long cap) {
    size_t n = m.size();
    if (n == 0)
        return XPoly(0);
    if (n == 1)
        return m[0][0];
    XPoly r(m[0][0].nvars());
    std::vector<size_t> cols(n);
    for (size_t j = 0; j < n; ++j)
        cols[j] = j;
    // Laplace along the first row, recursing on column subsets.
    struct Rec {
        const std::vector<std::vector<XPoly>>& m;
        long cap;
        XPoly run(size_t row, std::vector<size_t> cols) {
            if (cols.size() == 1)
                return m[row][cols[0]];
            XPoly acc(m[0][0].nvars());
            for (size_t k = 0; k < cols.size(); ++k) {
                const XPoly& pivot = m[row][cols[k]];
                if (pivot.is_zero())
                    continue;
                std::vector<size_t> rest;
                rest.reserve(cols.size() - 1);
                for (size_t l = 0; l < cols.size(); ++l)
                    if (l != k)
                        rest.push_back(cols[l]);
                XPoly sub = run(row + 1, std::move(rest));
                XPoly term = xp_mul(pivot, sub, cap);
                if (k % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            return acc;
        }
    } rec{m, cap};
    return rec.run(0, cols);
}

XPoly xp_divide_var_difference(const XPoly& f, int u, int v, long cap) {
    // Repeatedly rewrite the top power of x_u: c x_u^k w  ->  quotient term
    // c x_u^{k-1} w plus residue c x_u^{k-1} x_v w. The u-degree strictly
    // drops, and whatever survives without x_u must cancel for exactness.
    XPoly quotient(f.nvars());
    XPoly rest = f;
    (void)cap;
    for (;;) {
        XPoly next(f.nvars());
        bool any = false;
        for (const auto& [e, c] : rest.terms()) {
            if (e[static_cast<size_t>(u)] == 0) {
                next.add_term(e, c);
                continue;
            }
            any = true;
            ExponentVector e2 = e;
            e2[static_cast<size_t>(u)] -= 1;
            quotient.add_term(e2, c);
            ExponentVector e3 = e2;
            e3[static_cast<size_t>(v)] += 1;
            next.add_term(e3, c);
        }
        rest = std::move(next);
        if (!any)
            break;
    }
    if (!rest.is_zero())
        fail(pipeline_error::kind::nonzero_remainder,
             "polynomial not divisible by the variable difference");
    return quotient;
}

}  // namespace telsigma
