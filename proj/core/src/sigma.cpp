#include "telsigma/sigma.hpp"

#include <algorithm>
#include <numeric>

#include "telsigma/errors.hpp"

namespace telsigma {

XiTable::XiTable(const CurveModel& cm, const ExpansionSet& es)
    : cm_(cm), es_(es), g_(cm.td.genus()) {}

void XiTable::ensure(long j) {
    while (static_cast<long>(columns_.size()) < j) {
        long idx = static_cast<long>(columns_.size()) + 1;
        auto basis = cm_.td.phi_basis(idx);
        TSeries phi = expand_at_infinity(
            es_, XPoly::monomial(basis.back(), LambdaPolynomial::constant(1)));
        columns_.push_back(phi.shifted(g_ - 1));
    }
}

const LambdaPolynomial& XiTable::entry(long i, long j) {
    ensure(j);
    return columns_[static_cast<size_t>(j - 1)].coeff(i);
}

namespace {

// Division-free determinant: Laplace along rows with memoization on the
// remaining column subset (matrices here stay small after elimination).
LambdaPolynomial laplace_det(const std::vector<std::vector<LambdaPolynomial>>& m, long cap) {
    const size_t n = m.size();
    if (n == 0)
        return LambdaPolynomial::constant(1);
    std::map<std::vector<size_t>, LambdaPolynomial> memo;
    std::function<LambdaPolynomial(size_t, const std::vector<size_t>&)> rec =
        [&](size_t row, const std::vector<size_t>& cols) -> LambdaPolynomial {
        if (cols.size() == 1)
            return m[row][cols[0]];
        auto it = memo.find(cols);
        if (it != memo.end())
            return it->second;
        LambdaPolynomial acc;
        for (size_t k = 0; k < cols.size(); ++k) {
            const LambdaPolynomial& pivot = m[row][cols[k]];
            if (pivot.is_zero())
                continue;
            std::vector<size_t> rest;
            rest.reserve(cols.size() - 1);
            for (size_t l = 0; l < cols.size(); ++l)
                if (l != k)
                    rest.push_back(cols[l]);
            LambdaPolynomial term = lp_mul(pivot, rec(row + 1, rest), cap);
            if (k % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return memo.emplace(cols, std::move(acc)).first->second;
    };
    std::vector<size_t> cols(n);
    std::iota(cols.begin(), cols.end(), size_t{0});
    return rec(0, cols);
}

LambdaPolynomial xi_mu_at(XiTable& xi, const Partition& mu, long n, long cap) {
    const long g = xi.genus();
    std::vector<long> row_val(static_cast<size_t>(n));
    for (long i = 1; i <= n; ++i) {
        long part = i <= static_cast<long>(mu.size()) ? mu[static_cast<size_t>(i - 1)] : 0;
        row_val[static_cast<size_t>(i - 1)] = part - i;
    }
    std::vector<std::vector<LambdaPolynomial>> m(static_cast<size_t>(n),
                                                 std::vector<LambdaPolynomial>(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long j = 1; j <= n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] =
                xi.entry(row_val[static_cast<size_t>(i)], j);

    // Rows with m_i < -g vanish on the first g columns and carry a forced
    // unit at column -m_i; eliminate them by column operations.
    std::vector<long> rows, cols;
    for (long i = 0; i < n; ++i)
        rows.push_back(i);
    for (long j = 0; j < n; ++j)
        cols.push_back(j);
    int sign = 1;
    for (long i = n - 1; i >= 0; --i) {
        long mv = row_val[static_cast<size_t>(i)];
        if (mv >= -g)
            continue;
        long cj = -mv - 1;  // 0-based column of the forced unit
        require(cj < n, pipeline_error::kind::stabilization_failure, "xi row below matrix range");
        auto& row = m[static_cast<size_t>(i)];
        for (long j = 0; j < cj; ++j)
            require(row[static_cast<size_t>(j)].is_zero(), pipeline_error::kind::leading_mismatch,
                    "xi_{i,j} != 0 below the forced unit");
        require(row[static_cast<size_t>(cj)].is_constant() &&
                    row[static_cast<size_t>(cj)].constant_part() == 1,
                pipeline_error::kind::leading_mismatch, "xi_{-j,j} != 1");
        for (long j = cj + 1; j < n; ++j) {
            LambdaPolynomial f = row[static_cast<size_t>(j)];
            if (f.is_zero())
                continue;
            for (long r = 0; r < n; ++r)
                m[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    lp_mul(m[static_cast<size_t>(r)][static_cast<size_t>(cj)], f, cap);
        }
        // Expand along the now-unit row; track the permutation sign.
        long ri = static_cast<long>(std::find(rows.begin(), rows.end(), i) - rows.begin());
        long ci = static_cast<long>(std::find(cols.begin(), cols.end(), cj) - cols.begin());
        if ((ri + ci) % 2 == 1)
            sign = -sign;
        rows.erase(rows.begin() + ri);
        cols.erase(cols.begin() + ci);
    }

    std::vector<std::vector<LambdaPolynomial>> small;
    for (long r : rows) {
        std::vector<LambdaPolynomial> line;
        for (long c : cols)
            line.push_back(m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        small.push_back(std::move(line));
    }
    LambdaPolynomial det = laplace_det(small, cap);
    return sign > 0 ? det : -det;
}

}  // namespace

LambdaPolynomial xi_mu(XiTable& xi, const Partition& mu) {
    long n0 = std::max(static_cast<long>(mu.size()), xi.genus());
    long cap = xi.cap();  // stay in the capped quotient throughout
    LambdaPolynomial d0 = xi_mu_at(xi, mu, n0, cap);
    LambdaPolynomial d1 = xi_mu_at(xi, mu, n0 + 1, cap);
    LambdaPolynomial d2 = xi_mu_at(xi, mu, n0 + 2, cap);
    if (!(d0 == d1) || !(d0 == d2))
        fail(pipeline_error::kind::stabilization_failure,
             "xi_mu determinant did not stabilize between N and N+2");
    return d0;
}

USeries tau_series(const CurveModel& cm, const ExpansionSet& es, long w_bound) {
    const TelescopicData& td = cm.td;
    const long cap = es.cap;
    long mu_a_weight = std::accumulate(td.mu().begin(), td.mu().end(), 0L);

    XiTable xi(cm, es);
    SchurContext schur(td.gaps(), w_bound, cap);
    USeries tau(td.gaps(), w_bound, cap);
    for (const Partition& mu : partitions_up_to(w_bound)) {
        LambdaPolynomial coeff = xi_mu(xi, mu);
        if (coeff.is_zero())
            continue;
        long total = std::accumulate(mu.begin(), mu.end(), 0L);
        long w;
        if (!coeff.is_homogeneous(&w) || w != total - mu_a_weight)
            fail(pipeline_error::kind::grading_violation,
                 "xi_mu is not homogeneous of weight |mu| - |mu(A_m)|");
        tau += schur.schur(mu).scaled_poly(coeff);
    }

    for (const auto& [n, c] : tau.terms()) {
        bool ok = true;
        tau.hurwitz_coeff(n).for_each(
            [&](const LambdaMonomial&, const Rational& v) { ok = ok && is_integer(v); });
        if (!ok)
            fail(pipeline_error::kind::integrality_violation,
                 "tau has a Hurwitz coefficient outside Z[lambda]");
    }
    return tau;
}

BcnData assemble_bcn(const CurveModel& cm, const ExpansionSet& es, const QTable& q) {
    const TelescopicData& td = cm.td;
    const long g = td.genus();
    const auto& w = td.gaps();
    BcnData out;
    out.b.assign(static_cast<size_t>(g), std::vector<LambdaPolynomial>(static_cast<size_t>(g)));
    out.n.assign(static_cast<size_t>(g), std::vector<LambdaPolynomial>(static_cast<size_t>(g)));
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j) {
            const LambdaPolynomial& entry =
                es.omega[static_cast<size_t>(i)].coeff(w[static_cast<size_t>(j)] - 1);
            if (j < i)
                require(entry.is_zero(), pipeline_error::kind::leading_mismatch,
                        "B has a nonzero entry below the diagonal");
            if (j == i)
                require(entry.is_constant() && entry.constant_part() == 1,
                        pipeline_error::kind::leading_mismatch, "B diagonal entry is not 1");
            out.b[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry;
            out.n[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                q.at(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)]);
        }
    for (long i = 0; i < g; ++i)
        out.c.push_back(es.c_series.coeff(w[static_cast<size_t>(i)] - 1));

    // det B = 1, so B^{-1} = sum (-U)^k for the strictly upper part U.
    const long cap = es.cap;
    std::vector<std::vector<LambdaPolynomial>> u = out.b;
    for (long i = 0; i < g; ++i)
        u[static_cast<size_t>(i)][static_cast<size_t>(i)] = LambdaPolynomial();
    std::vector<std::vector<LambdaPolynomial>> id(
        static_cast<size_t>(g), std::vector<LambdaPolynomial>(static_cast<size_t>(g)));
    for (long i = 0; i < g; ++i)
        id[static_cast<size_t>(i)][static_cast<size_t>(i)] = LambdaPolynomial::constant(1);
    auto mat_mul = [&](const auto& x, const auto& y) {
        std::vector<std::vector<LambdaPolynomial>> r(
            static_cast<size_t>(g), std::vector<LambdaPolynomial>(static_cast<size_t>(g)));
        for (long i = 0; i < g; ++i)
            for (long j = 0; j < g; ++j)
                for (long k = 0; k < g; ++k)
                    r[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                        lp_mul(x[static_cast<size_t>(i)][static_cast<size_t>(k)],
                               y[static_cast<size_t>(k)][static_cast<size_t>(j)], cap);
        return r;
    };
    out.b_inv = id;
    std::vector<std::vector<LambdaPolynomial>> power = id;
    for (long k = 1; k < g; ++k) {
        power = mat_mul(power, u);
        for (long i = 0; i < g; ++i)
            for (long j = 0; j < g; ++j) {
                const auto& v = power[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (k % 2 == 1)
                    out.b_inv[static_cast<size_t>(i)][static_cast<size_t>(j)] -= v;
                else
                    out.b_inv[static_cast<size_t>(i)][static_cast<size_t>(j)] += v;
            }
    }
    // B B^{-1} = I.
    auto prod = mat_mul(out.b, out.b_inv);
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j) {
            const auto& v = prod[static_cast<size_t>(i)][static_cast<size_t>(j)];
            bool ok = (i == j) ? (v.is_constant() && v.constant_part() == 1) : v.is_zero();
            require(ok, pipeline_error::kind::determinant_mismatch, "B B^{-1} != I");
        }
    return out;
}

namespace {

USeries exp_argument(const std::vector<long>& gaps, long w_bound, long cap,
                     const std::vector<LambdaPolynomial>& linear,
                     const std::vector<std::vector<LambdaPolynomial>>& quad, int quad_sign) {
    const size_t g = gaps.size();
    USeries arg(gaps, w_bound, cap);
    for (size_t i = 0; i < g; ++i) {
        std::vector<long> e(g, 0);
        e[i] = 1;
        arg.add_term(e, linear[i]);
    }
    for (size_t i = 0; i < g; ++i)
        for (size_t j = i; j < g; ++j) {
            LambdaPolynomial v = quad[i][j];
            if (quad_sign < 0)
                v = -v;
            if (i == j)
                v = v.scaled(Rational(1, 2));
            std::vector<long> e(g, 0);
            e[i] += 1;
            e[j] += 1;
            arg.add_term(e, v);
        }
    return arg;
}

}  // namespace

SigmaExpansion sigma_series(const CurveModel& cm, const ExpansionSet& es, const BcnData& bcn,
                            const USeries& tau, long w_bound) {
    const TelescopicData& td = cm.td;
    const long g = td.genus();
    const long cap = es.cap;

    // c-bar = c B^{-1}; N-bar = (B^{-1})^T N B^{-1}.
    std::vector<LambdaPolynomial> cbar(static_cast<size_t>(g));
    for (long j = 0; j < g; ++j)
        for (long i = 0; i < g; ++i)
            cbar[static_cast<size_t>(j)] +=
                lp_mul(bcn.c[static_cast<size_t>(i)],
                       bcn.b_inv[static_cast<size_t>(i)][static_cast<size_t>(j)], cap);
    std::vector<std::vector<LambdaPolynomial>> nbar(
        static_cast<size_t>(g), std::vector<LambdaPolynomial>(static_cast<size_t>(g)));
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j)
            for (long k = 0; k < g; ++k)
                for (long l = 0; l < g; ++l)
                    nbar[static_cast<size_t>(i)][static_cast<size_t>(j)] += lp_mul(
                        bcn.b_inv[static_cast<size_t>(k)][static_cast<size_t>(i)],
                        lp_mul(bcn.n[static_cast<size_t>(k)][static_cast<size_t>(l)],
                               bcn.b_inv[static_cast<size_t>(l)][static_cast<size_t>(j)], cap),
                        cap);

    USeries tau_sub = us_substitute_linear(tau, bcn.b_inv);
    USeries arg = exp_argument(td.gaps(), w_bound, cap, cbar, nbar, -1);
    USeries sigma = us_mul(us_exp(arg), tau_sub);

    // Leading part and homogeneity of every coefficient.
    long mu_w = std::accumulate(td.mu().begin(), td.mu().end(), 0L);
    USeries lead = schur_function(td.gaps(), td.mu(), w_bound, cap);
    if (sigma.min_u_weight() != mu_w || !(sigma.truncated(mu_w) == lead))
        fail(pipeline_error::kind::leading_mismatch,
             "sigma does not start with the Schur polynomial of mu(A_m)");
    for (const auto& [n, c] : sigma.terms()) {
        long w;
        if (!c.is_homogeneous(&w) || w != sigma.u_weight(n) - mu_w)
            fail(pipeline_error::kind::grading_violation,
                 "sigma coefficient is not homogeneous of the predicted weight");
    }

    SigmaExpansion out;
    out.series = std::move(sigma);
    out.a = td.a();
    out.b_used = es.b.b;
    out.w_bound = w_bound;
    out.mu = td.mu();
    return out;
}

SigmaExpansion sigma_squared(const SigmaExpansion& se) {
    SigmaExpansion out = se;
    out.series = us_mul(se.series, se.series);
    return out;
}

void check_tau_sigma_round_trip(const CurveModel& cm, const BcnData& bcn, const USeries& tau,
                                const SigmaExpansion& se) {
    const TelescopicData& td = cm.td;
    USeries sigma_bv = us_substitute_linear(se.series, bcn.b);
    USeries arg = exp_argument(td.gaps(), se.w_bound, se.series.cap(),
                               [&] {
                                   std::vector<LambdaPolynomial> neg;
                                   for (const auto& c : bcn.c)
                                       neg.push_back(-c);
                                   return neg;
                               }(),
                               bcn.n, +1);
    USeries rhs = us_mul(us_exp(arg), sigma_bv);
    if (!(rhs == tau))
        fail(pipeline_error::kind::gauge_dependence,
             "tau/sigma round trip failed: exp(-cv + vNv/2) sigma(Bv) != tau(v)");
}

}  // namespace telsigma
