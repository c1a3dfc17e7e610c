#include "telsigma/bilinear.hpp"

#include <algorithm>

#include "telsigma/errors.hpp"

namespace telsigma {

namespace {
const LambdaPolynomial kZeroPoly;

void check_entry(const LambdaPolynomial& v, long weight, const char* table) {
    if (v.is_zero())
        return;
    long w;
    if (!v.is_homogeneous(&w) || w != weight)
        fail(pipeline_error::kind::grading_violation,
             std::string(table) + " entry violates its weight formula");
    bool ok = true;
    v.for_each([&](const LambdaMonomial&, const Rational& c) { ok = ok && is_integer(c); });
    if (!ok)
        fail(pipeline_error::kind::integrality_violation,
             std::string(table) + " entry has a non-integer coefficient");
}

}  // namespace

const LambdaPolynomial& CoeffTable::at(const ExponentVector& i, const ExponentVector& j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? kZeroPoly : it->second;
}

void CoeffTable::set(const ExponentVector& i, const ExponentVector& j, LambdaPolynomial v) {
    if (v.is_zero())
        entries.erase({i, j});
    else
        entries[{i, j}] = std::move(v);
}

XPoly dq_omega_numerator(const CurveModel& cm) {
    const int m = cm.td.m();
    auto h = h_matrix(cm);
    XPoly det_h = xp_det(h);

    XPoly x1_minus_y1 = XPoly::variable(2 * m, 0) - XPoly::variable(2 * m, m);
    XPoly num(2 * m);
    for (int i = 1; i <= m; ++i) {
        XPoly d = det_h.derivative(m + i - 1);
        if (d.is_zero())
            continue;
        XPoly term = xp_mul(xp_mul(x1_minus_y1, d), to_y_vars(cm.det_g[static_cast<size_t>(i - 1)], m));
        if (i % 2 == 1)
            num += term;
        else
            num -= term;
    }
    num += xp_mul(to_y_vars(cm.det_g[0], m), det_h);

    std::vector<long> weights = cm.td.a();
    weights.insert(weights.end(), cm.td.a().begin(), cm.td.a().end());
    long deg;
    long expect = 2 * (2 * cm.td.genus() - 1 + cm.td.a()[0]);
    if (!num.is_jointly_homogeneous(weights, &deg) || (!num.is_zero() && deg != expect))
        fail(pipeline_error::kind::grading_violation,
             "d_Q Omega numerator is not homogeneous of degree 2(2g-1+a_1)");
    return num;
}

CoeffTable tilde_c_table(const CurveModel& cm) {
    const int m = cm.td.m();
    const XPoly num = dq_omega_numerator(cm);

    // Reduce the x block monomial by monomial, grouped by the y part.
    std::map<ExponentVector, XPoly> by_y;  // y exponent -> polynomial in x
    for (const auto& [e, c] : num.terms()) {
        ExponentVector ex(e.begin(), e.begin() + m), ey(e.begin() + m, e.end());
        auto [it, inserted] = by_y.emplace(ey, XPoly(m));
        it->second.add_term(ex, c);
    }

    // After reducing x, group by the (now canonical) x part and reduce y.
    std::map<ExponentVector, XPoly> by_x;
    for (const auto& [ey, px] : by_y) {
        NormalForm nf = normal_form(cm, px);
        for (const auto& [order, coeff] : nf) {
            auto rep = cm.td.canonical_rep(order);
            require(rep.has_value(), pipeline_error::kind::window_exceeded,
                    "reduced order outside the semigroup");
            auto [it, inserted] = by_x.emplace(*rep, XPoly(m));
            it->second.add_term(ey, coeff);
        }
    }

    CoeffTable table;
    table.total_degree = 2 * (2 * cm.td.genus() - 1 + cm.td.a()[0]);
    for (const auto& [ex, py] : by_x) {
        NormalForm nf = normal_form(cm, py);
        long ox = cm.td.order_of(ex);
        for (const auto& [order, coeff] : nf) {
            auto rep = cm.td.canonical_rep(order);
            require(rep.has_value(), pipeline_error::kind::window_exceeded,
                    "reduced order outside the semigroup");
            check_entry(coeff, table.total_degree - ox - order, "tilde_c");
            table.set(ex, *rep, coeff);
        }
    }
    return table;
}

CoeffTable eta_c_table(const CurveModel& cm, const CoeffTable& tilde_c) {
    const TelescopicData& td = cm.td;
    const long bound = 2 * (2 * td.genus() - 1);

    // Window: pairs of semigroup orders o_i < o_j with o_i + o_j <= 2(2g-1);
    // entries outside carry negative weight and vanish identically.
    std::vector<std::pair<long, ExponentVector>> orders;
    for (long o = 0; o <= bound; ++o)
        if (auto rep = td.canonical_rep(o))
            orders.emplace_back(o, *rep);

    CoeffTable table;
    table.total_degree = bound;

    // Induction on the first exponent i_1 of the left index.
    long max_i1 = 0;
    for (const auto& [o, rep] : orders)
        max_i1 = std::max(max_i1, rep[0]);
    auto shift1 = [](const ExponentVector& e, long d) {
        ExponentVector r = e;
        r[0] += d;
        return r;
    };
    for (long i1 = 0; i1 <= max_i1; ++i1) {
        for (const auto& [oi, irep] : orders) {
            if (irep[0] != i1)
                continue;
            for (const auto& [oj, jrep] : orders) {
                if (oi >= oj || oi + oj > bound)
                    continue;
                LambdaPolynomial v;
                if (i1 == 0) {
                    v = tilde_c.at(shift1(jrep, 2), irep) - tilde_c.at(irep, shift1(jrep, 2));
                } else if (i1 == 1) {
                    ExponentVector i0 = irep;
                    i0[0] = 0;
                    v = tilde_c.at(shift1(jrep, 3), i0).scaled(2) -
                        tilde_c.at(i0, shift1(jrep, 3)).scaled(2) +
                        tilde_c.at(shift1(jrep, 2), irep) - tilde_c.at(irep, shift1(jrep, 2));
                } else {
                    v = table.at(shift1(irep, -1), shift1(jrep, 1)).scaled(2) -
                        table.at(shift1(irep, -2), shift1(jrep, 2)) +
                        tilde_c.at(shift1(jrep, 2), irep) - tilde_c.at(irep, shift1(jrep, 2));
                }
                check_entry(v, bound - oi - oj, "eta_c");
                table.set(irep, jrep, std::move(v));
            }
        }
    }
    return table;
}

const LambdaPolynomial& QTable::at(long i, long j) const {
    auto it = q.find({i, j});
    return it == q.end() ? kZeroPoly : it->second;
}

QTable q_table(const CurveModel& cm, const ExpansionSet& es, const CoeffTable& tilde_c,
               const CoeffTable& eta_c, long window) {
    const TelescopicData& td = cm.td;
    const long a1 = td.a()[0];
    const long cap = es.cap;
    require(window <= cap, pipeline_error::kind::window_exceeded,
            "q-table window exceeds the weight cap");

    // dx_1/det G_1 as a series; every expanded power below is exact-tailed.
    TSeries ratio = ts_mul(es.x[0].derivative(), ts_inverse(expand_at_infinity(es, cm.det_g[0])));

    // nu = [t_P^{a1} t_Q^{a1} (x_1(P) - x_1(Q))]^2 / (t_P - t_Q)^2.
    TSeries t_a1 = TSeries::monomial(a1, LambdaPolynomial::constant(1), -a1, cap);
    BiSeries n1 = BiSeries::separable(es.x_unit[0], t_a1) - BiSeries::separable(t_a1, es.x_unit[0]);
    BiSeries n1_sq = bs_mul(n1, n1);
    BiSeries nu = bs_divide_diagonal(bs_divide_diagonal(n1_sq));

    // Per-order factors x^rep(o)(t) * ratio, with and without the t^{2a1} shift.
    std::map<long, TSeries> bare, shifted;
    auto factor_for = [&](long o) -> const TSeries& {
        auto it = bare.find(o);
        if (it != bare.end())
            return it->second;
        auto rep = td.canonical_rep(o);
        require(rep.has_value(), pipeline_error::kind::window_exceeded, "order outside semigroup");
        TSeries f = ts_mul(expand_at_infinity(es, XPoly::monomial(*rep, LambdaPolynomial::constant(1))),
                           ratio);
        return bare.emplace(o, std::move(f)).first->second;
    };
    auto shifted_for = [&](long o) -> const TSeries& {
        auto it = shifted.find(o);
        if (it != shifted.end())
            return it->second;
        return shifted.emplace(o, factor_for(o).shifted(2 * a1)).first->second;
    };

    // A = t_P^{2a1} t_Q^{2a1} (x_1-y_1)^2 omega-hat / (dt_P dt_Q), assembled from
    // the reduced numerator and the eta correction.
    BiSeries acc = BiSeries::zero(cap);
    {
        // Group tilde_c entries by left order to keep the separable count low.
        std::map<long, TSeries> inner;
        for (const auto& [key, v] : tilde_c.entries) {
            long oi = td.order_of(key.first), oj = td.order_of(key.second);
            auto [it, inserted] = inner.emplace(oi, TSeries::zero(cap));
            it->second += ts_mul_poly(shifted_for(oj), v);
        }
        for (const auto& [oi, series] : inner)
            acc += BiSeries::separable(shifted_for(oi), series);
    }
    {
        std::map<long, TSeries> inner;
        for (const auto& [key, v] : eta_c.entries) {
            long oi = td.order_of(key.first), oj = td.order_of(key.second);
            auto [it, inserted] = inner.emplace(oi, TSeries::zero(cap));
            it->second += ts_mul_poly(factor_for(oj), v);
        }
        BiSeries c2 = BiSeries::zero(cap);
        for (const auto& [oi, series] : inner)
            c2 += BiSeries::separable(factor_for(oi), series);
        if (!c2.is_zero())
            acc += bs_mul(n1_sq, c2);
    }

    // Regularity at infinity x infinity: all pole-side coefficients cancel.
    for (const auto& [key, v] : acc.entries())
        if ((key.first < 0 || key.second < 0) && !v.is_zero())
            fail(pipeline_error::kind::leading_mismatch,
                 "omega-hat numerator series has a surviving pole term");
    // Symmetry of omega-hat, checked at the series level.
    if (!acc.is_symmetric())
        fail(pipeline_error::kind::symmetry_violation, "omega-hat series is not symmetric");

    BiSeries rest = bs_divide_diagonal(bs_divide_diagonal(acc - nu));
    BiSeries qs = bs_divide_exact(rest, nu);

    QTable out;
    out.window = window;
    for (long i = 1; i + 1 <= window; ++i)
        for (long j = 1; i + j <= window; ++j) {
            const LambdaPolynomial& v = qs.coeff(i - 1, j - 1);
            check_entry(v, i + j, "q");
            if (!v.is_zero())
                out.q[{i, j}] = v;
        }
    for (const auto& [key, v] : out.q)
        if (!(out.at(key.second, key.first) == v))
            fail(pipeline_error::kind::symmetry_violation, "q_{i,j} != q_{j,i}");
    return out;
}

}  // namespace telsigma
