#include "telsigma/curve.hpp"

#include <algorithm>

#include "telsigma/errors.hpp"

namespace telsigma {

CurveModel build_curve(const TelescopicData& td) {
    const int m = td.m();
    CurveModel cm;
    cm.td = td;
    cm.F.resize(static_cast<size_t>(m));
    for (int i = 1; i < m; ++i) {
        XPoly f(m);
        ExponentVector head(static_cast<size_t>(m), 0);
        head[static_cast<size_t>(i)] = td.bound(i);
        f.add_term(head, LambdaPolynomial::constant(1));
        f -= XPoly::monomial(td.ell_row(i), LambdaPolynomial::constant(1));
        for (std::uint32_t id = 0; id < td.catalog().size(); ++id) {
            const LambdaSymbol& s = td.catalog()[id];
            if (s.eq_index != i + 1)
                continue;
            f -= XPoly::monomial(s.exponents, LambdaPolynomial::symbol(id, s.weight));
        }
        long deg;
        if (!f.is_jointly_homogeneous(td.a(), &deg) || deg != td.a()[static_cast<size_t>(i)] * td.bound(i))
            fail(pipeline_error::kind::grading_violation,
                 "F_" + std::to_string(i + 1) + " is not jointly homogeneous of its degree");
        cm.F[static_cast<size_t>(i)] = std::move(f);
    }

    cm.partials.assign(static_cast<size_t>(m), std::vector<XPoly>(static_cast<size_t>(m), XPoly(m)));
    for (int i = 1; i < m; ++i)
        for (int j = 0; j < m; ++j)
            cm.partials[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                cm.F[static_cast<size_t>(i)].derivative(j);

    cm.det_g.resize(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        std::vector<std::vector<XPoly>> minor;
        for (int i = 1; i < m; ++i) {
            std::vector<XPoly> row;
            for (int j = 0; j < m; ++j)
                if (j != k)
                    row.push_back(cm.partials[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            minor.push_back(std::move(row));
        }
        cm.det_g[static_cast<size_t>(k)] = xp_det(minor);
        long deg;
        if (!cm.det_g[static_cast<size_t>(k)].is_jointly_homogeneous(td.a(), &deg))
            fail(pipeline_error::kind::grading_violation, "det G_k is not jointly homogeneous");
    }
    return cm;
}

namespace {

// Largest variable index (>= 1) whose exponent exceeds the B(A_m) bound.
int out_of_bound_var(const TelescopicData& td, const ExponentVector& e) {
    for (int i = td.m() - 1; i >= 1; --i)
        if (e[static_cast<size_t>(i)] >= td.bound(i))
            return i;
    return -1;
}

}  // namespace

NormalForm normal_form(const CurveModel& cm, const XPoly& p) {
    const TelescopicData& td = cm.td;
    std::map<ExponentVector, NormalForm> memo;

    // Reduce a single monomial to its B(A_m) decomposition.
    std::function<const NormalForm&(const ExponentVector&)> reduce =
        [&](const ExponentVector& e) -> const NormalForm& {
        auto hit = memo.find(e);
        if (hit != memo.end())
            return hit->second;
        NormalForm nf;
        int i = out_of_bound_var(td, e);
        if (i < 0) {
            nf.emplace(td.order_of(e), LambdaPolynomial::constant(1));
        } else {
            // x_i^{bound} = prod x_j^{ell_{i,j}} + sum lambda x^j; multiply by the
            // remaining exponent and recurse on each resulting monomial.
            ExponentVector rest = e;
            rest[static_cast<size_t>(i)] -= td.bound(i);
            auto absorb = [&](const ExponentVector& add, const LambdaPolynomial& c) {
                ExponentVector e2 = rest;
                for (size_t v = 0; v < e2.size(); ++v)
                    e2[v] += add[v];
                const NormalForm& sub = reduce(e2);
                for (const auto& [order, coeff] : sub) {
                    auto v = lp_mul(coeff, c);
                    if (v.is_zero())
                        continue;
                    auto [it, inserted] = nf.emplace(order, v);
                    if (!inserted) {
                        it->second += v;
                        if (it->second.is_zero())
                            nf.erase(it);
                    }
                }
            };
            absorb(td.ell_row(i), LambdaPolynomial::constant(1));
            for (std::uint32_t id = 0; id < td.catalog().size(); ++id) {
                const LambdaSymbol& s = td.catalog()[id];
                if (s.eq_index != i + 1)
                    continue;
                absorb(s.exponents, LambdaPolynomial::symbol(id, s.weight));
            }
        }
        return memo.emplace(e, std::move(nf)).first->second;
    };

    NormalForm out;
    for (const auto& [e, c] : p.terms()) {
        const NormalForm& sub = reduce(e);
        for (const auto& [order, coeff] : sub) {
            auto v = lp_mul(coeff, c);
            if (v.is_zero())
                continue;
            auto [it, inserted] = out.emplace(order, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    }
    return out;
}

XPoly normal_form_poly(const CurveModel& cm, const NormalForm& nf) {
    XPoly r(cm.td.m());
    for (const auto& [order, coeff] : nf) {
        auto rep = cm.td.canonical_rep(order);
        require(rep.has_value(), pipeline_error::kind::window_exceeded,
                "normal form order outside the semigroup");
        r.add_term(*rep, coeff);
    }
    return r;
}

ExponentVector check_det_gk_leading(const CurveModel& cm, int k) {
    const TelescopicData& td = cm.td;
    long target_order = 2 * td.genus() - 1 + td.a()[static_cast<size_t>(k - 1)];
    auto gamma = td.canonical_rep(target_order);
    require(gamma.has_value(), pipeline_error::kind::leading_mismatch,
            "leading order of det G_k is not in the semigroup");

    NormalForm nf = normal_form(cm, cm.det_g[static_cast<size_t>(k - 1)]);
    require(!nf.empty(), pipeline_error::kind::leading_mismatch, "det G_k reduced to zero");
    auto top = std::prev(nf.end());
    Rational expect = Rational((k % 2 == 1) ? 1 : -1) * Rational(td.a()[static_cast<size_t>(k - 1)]);
    if (top->first != target_order || !top->second.is_constant() ||
        top->second.constant_part() != expect)
        fail(pipeline_error::kind::leading_mismatch,
             "det G_" + std::to_string(k) + " leading term is not (-1)^{k+1} a_k x^gamma");
    return *gamma;
}

XPoly to_xy_vars(const XPoly& p, int m) {
    std::vector<int> ren(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v)
        ren[static_cast<size_t>(v)] = v;
    return p.renamed(ren, 2 * m);
}

XPoly to_y_vars(const XPoly& p, int m) {
    std::vector<int> ren(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v)
        ren[static_cast<size_t>(v)] = m + v;
    return p.renamed(ren, 2 * m);
}

std::vector<std::vector<XPoly>> h_matrix(const CurveModel& cm) {
    const int m = cm.td.m();
    std::vector<std::vector<XPoly>> h(static_cast<size_t>(m - 1),
                                      std::vector<XPoly>(static_cast<size_t>(m - 1), XPoly(2 * m)));
    for (int i = 1; i < m; ++i) {
        for (int j = 1; j < m; ++j) {
            // F_i with variables below j replaced by y; the two evaluation
            // points differ only in slot j (x_j vs y_j).
            std::vector<int> hi(static_cast<size_t>(m)), lo(static_cast<size_t>(m));
            for (int v = 0; v < m; ++v) {
                hi[static_cast<size_t>(v)] = v < j ? m + v : v;
                lo[static_cast<size_t>(v)] = v <= j ? m + v : v;
            }
            XPoly diff = cm.F[static_cast<size_t>(i)].renamed(hi, 2 * m) -
                         cm.F[static_cast<size_t>(i)].renamed(lo, 2 * m);
            h[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                xp_divide_var_difference(diff, j, m + j);
        }
    }
    return h;
}

}  // namespace telsigma
