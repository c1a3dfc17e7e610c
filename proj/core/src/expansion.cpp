#include "telsigma/expansion.hpp"

#include <algorithm>
#include <numeric>

#include "telsigma/errors.hpp"
#include "telsigma/integrality.hpp"

namespace telsigma {

BVector choose_b(const TelescopicData& td) {
    const auto& a = td.a();
    // Fold left: keep coefficients c with sum c_j a_j = gcd so far, extending by
    // the minimal-|u| Bezout pair u*g + v*a_i = gcd(g, a_i) at each step.
    std::vector<long> coeff{1};
    long g = a[0];
    for (size_t i = 1; i < a.size(); ++i) {
        long g2 = std::gcd(g, a[i]);
        long n = a[i] / g2;  // u is determined mod n; pick the least |u|, ties positive
        long r0 = g, r1 = a[i], s0 = 1, s1 = 0;
        while (r1 != 0) {
            long q = r0 / r1;
            long r2 = r0 - q * r1;
            long s2 = s0 - q * s1;
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        long u = ((s0 % n) + n) % n;
        if (2 * u > n)
            u -= n;
        long v = (g2 - u * g) / a[i];
        for (long& c : coeff)
            c *= u;
        coeff.push_back(v);
        g = g2;
    }
    // gcd is 1; flip the sign so the combination is -1.
    for (long& c : coeff)
        c = -c;
    BVector b{std::move(coeff)};
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b.b[i];
    require(s == -1, pipeline_error::kind::determinant_mismatch, "choose_b: sum a_i b_i != -1");
    return b;
}

namespace {

long det_int(const std::vector<std::vector<long>>& m) {
    size_t n = m.size();
    if (n == 1)
        return m[0][0];
    long acc = 0;
    for (size_t k = 0; k < n; ++k) {
        if (m[0][k] == 0)
            continue;
        std::vector<std::vector<long>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<long> row;
            for (size_t j = 0; j < n; ++j)
                if (j != k)
                    row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        long term = m[0][k] * det_int(minor);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

DMatrix build_d_matrix(const TelescopicData& td, const BVector& b) {
    const int m = td.m();
    DMatrix d;
    d.rows.assign(static_cast<size_t>(m), std::vector<long>(static_cast<size_t>(m), 0));
    for (int i = 1; i < m; ++i) {
        for (int j = 0; j < i; ++j)
            d.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] =
                -td.ell_row(i)[static_cast<size_t>(j)];
        d.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(i)] = td.bound(i);
    }
    d.rows[static_cast<size_t>(m - 1)] = b.b;

    d.det = det_int(d.rows);
    long expect = (m % 2 == 0) ? 1 : -1;
    if (d.det != expect)
        fail(pipeline_error::kind::determinant_mismatch,
             "det D = " + std::to_string(d.det) + ", expected (-1)^m");

    // Integer inverse via the adjugate (det is a unit).
    d.inverse.assign(static_cast<size_t>(m), std::vector<long>(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<std::vector<long>> minor;
            for (int r = 0; r < m; ++r) {
                if (r == j)
                    continue;
                std::vector<long> row;
                for (int c = 0; c < m; ++c)
                    if (c != i)
                        row.push_back(d.rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
                minor.push_back(std::move(row));
            }
            long cof = (m == 1) ? 1 : det_int(minor);
            if ((i + j) % 2 == 1)
                cof = -cof;
            d.inverse[static_cast<size_t>(i)][static_cast<size_t>(j)] = cof * d.det;  // det = +-1
        }
    // D * D^{-1} = I, cheap and worth keeping.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            long s = 0;
            for (int k = 0; k < m; ++k)
                s += d.rows[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     d.inverse[static_cast<size_t>(k)][static_cast<size_t>(j)];
            require(s == (i == j ? 1 : 0), pipeline_error::kind::determinant_mismatch,
                    "integer inverse of D failed");
        }
    return d;
}

namespace {

// Partial-sum unit series X_i through order cur-1, with slot `cur` zeroed so
// the order-`cur` residual can be read off directly.
TSeries partial_series(const std::vector<std::vector<LambdaPolynomial>>& p, int i, long cur,
                       long cap) {
    std::vector<LambdaPolynomial> c(static_cast<size_t>(cur) + 1);
    for (long k = 0; k < cur; ++k)
        c[static_cast<size_t>(k)] = p[static_cast<size_t>(i)][static_cast<size_t>(k)];
    return TSeries::make(0, std::move(c), 0, cap, false);
}

void check_integral_homogeneous(const LambdaPolynomial& v, long weight, const char* what) {
    long w;
    if (!v.is_homogeneous(&w) || (!v.is_zero() && w != weight))
        fail(pipeline_error::kind::grading_violation,
             std::string(what) + " is not homogeneous of weight " + std::to_string(weight));
    bool ok = true;
    v.for_each([&](const LambdaMonomial&, const Rational& c) { ok = ok && is_integer(c); });
    if (!ok)
        fail(pipeline_error::kind::residual_not_integral,
             std::string(what) + " has a non-integer coefficient");
}

}  // namespace

ExpansionSet expand_x(const CurveModel& cm, const BVector& b, long t_order, long cap) {
    const TelescopicData& td = cm.td;
    const int m = td.m();
    ExpansionSet es;
    es.b = b;
    es.d = build_d_matrix(td, b);
    es.t_order = t_order;
    es.cap = cap;

    const long compute_to = std::min(t_order, cap == kNoCap ? t_order : cap);

    // p[i][k]: coefficient of t^k in t^{a_i} x_i; p[i][0] = 1.
    std::vector<std::vector<LambdaPolynomial>> p(
        static_cast<size_t>(m),
        std::vector<LambdaPolynomial>(static_cast<size_t>(compute_to) + 1));
    for (int i = 0; i < m; ++i)
        p[static_cast<size_t>(i)][0] = LambdaPolynomial::constant(1);

    for (long cur = 1; cur <= compute_to; ++cur) {
        std::vector<TSeries> partial;
        partial.reserve(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            partial.push_back(partial_series(p, i, cur, cap));

        // Residuals of the defining equations at order cur with the unknowns zeroed.
        std::vector<LambdaPolynomial> rhs(static_cast<size_t>(m));
        for (int i = 1; i < m; ++i) {
            TSeries residual = ts_pow(partial[static_cast<size_t>(i)], td.bound(i));
            TSeries prod = TSeries::monomial(0, LambdaPolynomial::constant(1), 0, cap);
            for (int j = 0; j < i; ++j)
                prod = ts_mul(prod, ts_pow(partial[static_cast<size_t>(j)],
                                           td.ell_row(i)[static_cast<size_t>(j)]));
            residual = residual - prod;
            for (std::uint32_t id = 0; id < td.catalog().size(); ++id) {
                const LambdaSymbol& s = td.catalog()[id];
                if (s.eq_index != i + 1 || s.weight > cur)
                    continue;
                TSeries term = TSeries::monomial(s.weight, LambdaPolynomial::symbol(id, s.weight),
                                                 0, cap);
                for (int k = 0; k < m; ++k)
                    if (s.exponents[static_cast<size_t>(k)] > 0)
                        term = ts_mul(term, ts_pow(partial[static_cast<size_t>(k)],
                                                   s.exponents[static_cast<size_t>(k)]));
                residual = residual - term;
            }
            rhs[static_cast<size_t>(i - 1)] = -residual.coeff(cur);
        }
        // Residual of the local-parameter identity, split so only non-negative
        // powers of the partial sums appear.
        {
            TSeries lhs = TSeries::monomial(0, LambdaPolynomial::constant(1), 0, cap);
            TSeries rhs_prod = lhs;
            for (int j = 0; j < m; ++j) {
                if (b.b[static_cast<size_t>(j)] < 0)
                    lhs = ts_mul(lhs, ts_pow(partial[static_cast<size_t>(j)],
                                             -b.b[static_cast<size_t>(j)]));
                else if (b.b[static_cast<size_t>(j)] > 0)
                    rhs_prod = ts_mul(rhs_prod, ts_pow(partial[static_cast<size_t>(j)],
                                                       b.b[static_cast<size_t>(j)]));
            }
            rhs[static_cast<size_t>(m - 1)] = (lhs - rhs_prod).coeff(cur);
        }

        for (int i = 0; i < m; ++i) {
            LambdaPolynomial v;
            for (int j = 0; j < m; ++j) {
                long e = es.d.inverse[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (e != 0)
                    v += rhs[static_cast<size_t>(j)].scaled(Rational(e));
            }
            check_integral_homogeneous(v, cur, "p_{i,k}");
            p[static_cast<size_t>(i)][static_cast<size_t>(cur)] = std::move(v);
        }
    }

    bool tail_exact = cap != kNoCap && compute_to >= cap;
    for (int i = 0; i < m; ++i) {
        TSeries unit = TSeries::make(0, p[static_cast<size_t>(i)], 0, cap, tail_exact);
        es.x_unit.push_back(unit);
        es.x.push_back(unit.shifted(-td.a()[static_cast<size_t>(i)]));
    }

    // Local parameter consistency: prod x_i^{b_i} = t on the whole window.
    {
        TSeries prod = TSeries::monomial(0, LambdaPolynomial::constant(1), 0, cap);
        for (int j = 0; j < m; ++j) {
            long e = b.b[static_cast<size_t>(j)];
            const TSeries& xi = es.x[static_cast<size_t>(j)];
            prod = ts_mul(prod, e >= 0 ? ts_pow(xi, e) : ts_pow(ts_inverse(xi), -e));
        }
        TSeries t = TSeries::monomial(1, LambdaPolynomial::constant(1), -1, cap);
        if (!ts_equal_up_to(prod, t, prod.window_end()))
            fail(pipeline_error::kind::residual_not_integral,
                 "product of x_i^{b_i} does not reproduce the local parameter");
    }
    return es;
}

TSeries expand_at_infinity(const ExpansionSet& es, const XPoly& p) {
    TSeries acc = TSeries::zero(es.cap);
    for (const auto& [e, c] : p.terms()) {
        TSeries term = TSeries::monomial(0, LambdaPolynomial::constant(1), 0, es.cap);
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0)
                term = ts_mul(term, ts_pow(es.x[v], e[v]));
        acc += ts_mul_poly(term, c);
    }
    return acc;
}

void expand_omega(const CurveModel& cm, ExpansionSet& es) {
    const TelescopicData& td = cm.td;
    const long g = td.genus();
    TSeries base;  // dx_1/det G_1 as a function of t
    {
        TSeries det1 = expand_at_infinity(es, cm.det_g[0]);
        base = ts_mul(es.x[0].derivative(), ts_inverse(det1));
    }
    // Gauge identity against every other column deletion.
    for (int k = 1; k < td.m(); ++k) {
        TSeries detk = expand_at_infinity(es, cm.det_g[static_cast<size_t>(k)]);
        TSeries alt = ts_mul(es.x[static_cast<size_t>(k)].derivative(), ts_inverse(detk));
        if (k % 2 == 1)
            alt = -alt;
        long check_to = std::min(base.window_end(), alt.window_end());
        if (!ts_equal_up_to(base, alt, check_to))
            fail(pipeline_error::kind::gauge_dependence,
                 "dx_1/det G_1 != (-1)^{k-1} dx_k/det G_k at k = " + std::to_string(k + 1));
    }

    auto phis = td.phi_basis(g);
    es.omega.clear();
    for (long i = 1; i <= g; ++i) {
        const ExponentVector& phi = phis[static_cast<size_t>(g - i)];
        TSeries w = -ts_mul(expand_at_infinity(es, XPoly::monomial(phi, LambdaPolynomial::constant(1))),
                            base);
        long lead = td.gaps()[static_cast<size_t>(i - 1)] - 1;
        auto val = w.valuation();
        if (!val || *val != lead || !w.coeff(lead).is_constant() ||
            w.coeff(lead).constant_part() != 1)
            fail(pipeline_error::kind::leading_mismatch,
                 "omega_" + std::to_string(i) + " does not start as t^{w_i-1}");
        for (long e = lead; e <= w.window_end(); ++e) {
            bool ok = true;
            w.coeff(e).for_each([&](const LambdaMonomial&, const Rational& c) {
                ok = ok && is_integer(c);
            });
            if (!ok)
                fail(pipeline_error::kind::integrality_violation,
                     "omega coefficient b_{i,j} is not integral");
        }
        es.omega.push_back(std::move(w));
    }
}

void compute_c_series(const CurveModel& cm, ExpansionSet& es) {
    const TelescopicData& td = cm.td;
    require(!es.omega.empty(), pipeline_error::kind::window_exceeded,
            "compute_c_series needs the omega expansions");
    long wg = td.gaps().back();
    TSeries h = es.omega.back().shifted(-(wg - 1));  // 1 + sum b_{g,j} t^j
    TSeries c = ts_mul(h.derivative(), ts_inverse(h)).scaled(Rational(1, 2));

    RingSpec tilde = RingSpec::make(RingTag::z_lambda_tilde, td);
    for (long e = std::max(c.min_exp(), 0L); e <= c.window_end(); ++e) {
        const LambdaPolynomial& ck = c.coeff(e);
        if (!check_membership(ck, tilde))
            fail(pipeline_error::kind::integrality_violation,
                 "c_k not in Z[lambda~] at k = " + std::to_string(e + 1));
        bool twice_ok = true;
        ck.for_each([&](const LambdaMonomial&, const Rational& v) {
            twice_ok = twice_ok && is_integer(v * 2);
        });
        if (!twice_ok)
            fail(pipeline_error::kind::integrality_violation,
                 "2 c_k not integral at k = " + std::to_string(e + 1));
    }
    es.c_series = std::move(c);
}

}  // namespace telsigma
