#include "telsigma/biseries.hpp"

#include <algorithm>

#include "telsigma/errors.hpp"

namespace telsigma {

namespace {
const LambdaPolynomial kZeroPoly;

long add_horizon(long h, long d) {
    return h == kNoCap ? kNoCap : h + d;
}
}  // namespace

BiSeries BiSeries::zero(long cap) {
    BiSeries s;
    s.cap_ = cap;
    s.exact_ = true;
    return s;
}

BiSeries BiSeries::monomial(long i, long j, const LambdaPolynomial& c, std::optional<long> grade,
                            long cap) {
    BiSeries s;
    s.cap_ = cap;
    s.grade_ = grade;
    s.min_p_ = i;
    s.min_q_ = j;
    s.valid_total_ = i + j;
    s.exact_ = true;
    if (!c.is_zero())
        s.c_.emplace(std::make_pair(i, j), c);
    s.check_grading("monomial");
    return s;
}

BiSeries BiSeries::separable(const TSeries& f, const TSeries& g) {
    require(f.cap() == g.cap(), pipeline_error::kind::cap_mismatch,
            "separable product with different caps");
    BiSeries s;
    s.cap_ = f.cap();
    if (f.grade() && g.grade())
        s.grade_ = *f.grade() + *g.grade();
    s.min_p_ = f.min_exp();
    s.min_q_ = g.min_exp();
    long covf = f.exact_tail() ? kNoCap : f.window_end();
    long covg = g.exact_tail() ? kNoCap : g.window_end();
    long cov = std::min(add_horizon(covf, g.min_exp()), add_horizon(covg, f.min_exp()));
    s.exact_ = f.exact_tail() && g.exact_tail();
    s.valid_total_ = cov == kNoCap ? f.window_end() + g.window_end() : cov;
    if (s.grade_)
        s.valid_total_ = std::min(s.valid_total_, s.cap_ - *s.grade_);
    for (long i = f.min_exp(); i <= f.window_end(); ++i) {
        const auto& fi = f.coeff(i);
        if (fi.is_zero())
            continue;
        for (long j = g.min_exp(); j <= g.window_end() && i + j <= s.valid_total_; ++j) {
            const auto& gj = g.coeff(j);
            if (gj.is_zero())
                continue;
            auto v = lp_mul(fi, gj, s.cap_);
            if (!v.is_zero())
                s.c_.emplace(std::make_pair(i, j), std::move(v));
        }
    }
    s.check_grading("separable");
    return s;
}

void BiSeries::set_coeff(long i, long j, LambdaPolynomial v) {
    if (v.is_zero())
        c_.erase({i, j});
    else
        c_[{i, j}] = std::move(v);
}

void BiSeries::check_grading(const char* where) const {
    if (!grade_ || !audit::enabled())
        return;
    for (const auto& [key, p] : c_) {
        long w;
        if (!p.is_homogeneous(&w) || (!p.is_zero() && w != key.first + key.second + *grade_))
            fail(pipeline_error::kind::grading_violation,
                 std::string(where) + ": bivariate coefficient at (" + std::to_string(key.first) +
                     "," + std::to_string(key.second) + ") contradicts grade " +
                     std::to_string(*grade_));
    }
}

void BiSeries::clamp_to_cap() {
    if (!grade_)
        return;
    for (auto it = c_.begin(); it != c_.end();)
        if (it->first.first + it->first.second + *grade_ > cap_)
            it = c_.erase(it);
        else
            ++it;
}

const LambdaPolynomial& BiSeries::coeff(long i, long j) const {
    if (i < min_p_ || j < min_q_)
        return kZeroPoly;
    if (i + j <= valid_total_) {
        auto it = c_.find({i, j});
        return it == c_.end() ? kZeroPoly : it->second;
    }
    if (exact_)
        return kZeroPoly;
    if (grade_ && i + j + *grade_ > cap_)
        return kZeroPoly;
    fail(pipeline_error::kind::truncation_exceeded,
         "bivariate read at (" + std::to_string(i) + "," + std::to_string(j) +
             ") beyond total-degree horizon " + std::to_string(valid_total_));
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    require(cap_ == o.cap_, pipeline_error::kind::cap_mismatch,
            "adding bivariate series with different caps");
    if (o.grade_) {
        if (!grade_ || c_.empty())
            grade_ = o.grade_;
        else if (!o.c_.empty() && *grade_ != *o.grade_)
            fail(pipeline_error::kind::grading_violation, "adding bivariate series of different grades");
    }
    long cov = std::min(horizon(), o.horizon());
    min_p_ = std::min(min_p_, o.min_p_);
    min_q_ = std::min(min_q_, o.min_q_);
    exact_ = exact_ && o.exact_;
    long bound = cov;
    if (cov == kNoCap)
        bound = std::max(valid_total_, o.valid_total_);
    if (grade_)
        bound = std::min(bound, cap_ - *grade_);
    valid_total_ = bound;
    for (auto it = c_.begin(); it != c_.end();)
        if (it->first.first + it->first.second > bound)
            it = c_.erase(it);
        else
            ++it;
    for (const auto& [key, p] : o.c_) {
        if (key.first + key.second > bound)
            continue;
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(key, p);
        } else {
            it->second += p;
            if (it->second.is_zero())
                c_.erase(it);
        }
    }
    check_grading("bs_add");
    return *this;
}

BiSeries BiSeries::operator-() const {
    BiSeries r = *this;
    for (auto& [key, p] : r.c_)
        p = -p;
    return r;
}

BiSeries BiSeries::transposed() const {
    BiSeries r;
    r.cap_ = cap_;
    r.grade_ = grade_;
    r.min_p_ = min_q_;
    r.min_q_ = min_p_;
    r.valid_total_ = valid_total_;
    r.exact_ = exact_;
    for (const auto& [key, p] : c_)
        r.c_.emplace(std::make_pair(key.second, key.first), p);
    return r;
}

bool BiSeries::is_symmetric() const {
    BiSeries t = transposed();
    long bound = std::min(horizon(), t.horizon());
    if (bound == kNoCap)
        bound = valid_total_;
    return bs_equal_up_to(*this, t, bound);
}

BiSeries BiSeries::shifted(long dp, long dq) const {
    BiSeries r;
    r.cap_ = cap_;
    if (grade_)
        r.grade_ = *grade_ - dp - dq;
    r.min_p_ = min_p_ + dp;
    r.min_q_ = min_q_ + dq;
    r.valid_total_ = valid_total_ == kNoCap ? kNoCap : valid_total_ + dp + dq;
    r.exact_ = exact_;
    for (const auto& [key, p] : c_)
        r.c_.emplace(std::make_pair(key.first + dp, key.second + dq), p);
    return r;
}

bool BiSeries::is_zero() const {
    for (const auto& [key, p] : c_)
        if (!p.is_zero())
            return false;
    return exact_;
}

BiSeries bs_mul(const BiSeries& a, const BiSeries& b) {
    require(a.cap_ == b.cap_, pipeline_error::kind::cap_mismatch,
            "multiplying bivariate series with different caps");
    BiSeries r;
    r.cap_ = a.cap_;
    if (a.grade_ && b.grade_)
        r.grade_ = *a.grade_ + *b.grade_;
    r.min_p_ = a.min_p_ + b.min_p_;
    r.min_q_ = a.min_q_ + b.min_q_;
    long cov = std::min(add_horizon(a.horizon(), b.min_p_ + b.min_q_),
                        add_horizon(b.horizon(), a.min_p_ + a.min_q_));
    r.exact_ = a.exact_ && b.exact_;
    long stored_bound = a.valid_total_ + b.valid_total_;
    r.valid_total_ = cov == kNoCap ? stored_bound : std::min(cov, stored_bound);
    if (cov == kNoCap && (a.c_.empty() || b.c_.empty()))
        r.valid_total_ = r.min_p_ + r.min_q_;
    if (r.grade_)
        r.valid_total_ = std::min(r.valid_total_, r.cap_ - *r.grade_);

    for (const auto& [ka, pa] : a.c_) {
        if (pa.is_zero())
            continue;
        for (const auto& [kb, pb] : b.c_) {
            long i = ka.first + kb.first, j = ka.second + kb.second;
            if (i + j > r.valid_total_)
                continue;
            auto v = lp_mul(pa, pb, r.cap_);
            if (v.is_zero())
                continue;
            auto it = r.c_.find({i, j});
            if (it == r.c_.end())
                r.c_.emplace(std::make_pair(i, j), std::move(v));
            else {
                it->second += v;
                if (it->second.is_zero())
                    r.c_.erase(it);
            }
        }
    }
    r.check_grading("bs_mul");
    return r;
}

BiSeries bs_mul_p(const BiSeries& a, const TSeries& f) {
    TSeries one = TSeries::monomial(0, LambdaPolynomial::constant(1), 0, f.cap());
    return bs_mul(a, BiSeries::separable(f, one));
}

BiSeries bs_mul_q(const BiSeries& a, const TSeries& g) {
    TSeries one = TSeries::monomial(0, LambdaPolynomial::constant(1), 0, g.cap());
    return bs_mul(a, BiSeries::separable(one, g));
}

BiSeries bs_divide_diagonal(const BiSeries& s) {
    BiSeries q;
    q.cap_ = s.cap_;
    if (s.grade_)
        q.grade_ = *s.grade_ + 1;
    q.min_p_ = s.min_p_ - 1;
    q.min_q_ = s.min_q_ - 1;
    long bound;
    if (s.horizon() == kNoCap)
        bound = q.grade_ ? s.cap_ - *q.grade_ : s.valid_total_ - 1;
    else
        bound = s.horizon() - 1;
    if (q.grade_)
        bound = std::min(bound, s.cap_ - *q.grade_);
    q.valid_total_ = std::max(bound, q.min_p_ + q.min_q_ - 1);
    q.exact_ = s.exact_;

    // q_{i,j} = s_{i+1,j} + q_{i+1,j-1}: sweep columns up, rows down.
    for (long j = q.min_q_; j <= q.valid_total_ - q.min_p_; ++j) {
        for (long i = q.valid_total_ - j; i >= q.min_p_; --i) {
            LambdaPolynomial v = s.coeff(i + 1, j);
            if (j - 1 >= q.min_q_) {
                auto it = q.c_.find({i + 1, j - 1});
                if (it != q.c_.end())
                    v += it->second;
            }
            q.set_coeff(i, j, std::move(v));
        }
    }

    // Recompose (t_P - t_Q) q and compare with s over the shared horizon.
    BiSeries recomposed = q.shifted(1, 0) - q.shifted(0, 1);
    long check = std::min(s.horizon(), recomposed.horizon());
    if (check == kNoCap)
        check = std::max(s.valid_total_, recomposed.valid_total_);
    if (!bs_equal_up_to(s, recomposed, check))
        fail(pipeline_error::kind::nonzero_remainder,
             "division by (t_P - t_Q) left a remainder");
    q.check_grading("bs_divide_diagonal");
    return q;
}

BiSeries bs_divide_exact(const BiSeries& numer, const BiSeries& denom) {
    require(numer.cap_ == denom.cap_, pipeline_error::kind::cap_mismatch,
            "dividing bivariate series with different caps");
    // Locate the pivot: smallest total degree, then smallest first exponent.
    long delta = kNoCap;
    std::pair<long, long> pivot{0, 0};
    for (const auto& [key, p] : denom.c_) {
        if (p.is_zero())
            continue;
        long tot = key.first + key.second;
        if (tot < delta || (tot == delta && key.first < pivot.first)) {
            delta = tot;
            pivot = key;
        }
    }
    if (delta == kNoCap)
        fail(pipeline_error::kind::not_a_unit, "division by zero bivariate series");
    const LambdaPolynomial& pv = denom.coeff(pivot.first, pivot.second);
    if (!pv.is_constant())
        fail(pipeline_error::kind::not_a_unit, "divisor pivot is not a rational constant");
    Rational c0 = pv.constant_part();

    BiSeries q;
    q.cap_ = numer.cap_;
    if (numer.grade_ && denom.grade_)
        q.grade_ = *numer.grade_ - *denom.grade_;
    q.min_p_ = numer.min_p_ - pivot.first;
    q.min_q_ = numer.min_q_ - pivot.second;
    long bound;
    if (numer.horizon() == kNoCap)
        bound = q.grade_ ? numer.cap_ - *q.grade_ : numer.valid_total_ - delta;
    else
        bound = numer.horizon() - delta;
    if (q.grade_)
        bound = std::min(bound, numer.cap_ - *q.grade_);
    q.valid_total_ = std::max(bound, q.min_p_ + q.min_q_ - 1);
    q.exact_ = numer.exact_;

    // Solve by (total degree, first exponent); contributions at equal total
    // come from divisor slots with strictly larger first exponent than the
    // pivot, hence from quotient slots already computed.
    for (long d = q.min_p_ + q.min_q_; d <= q.valid_total_; ++d) {
        for (long i = q.min_p_; d - i >= q.min_q_; ++i) {
            long j = d - i;
            LambdaPolynomial acc = numer.coeff(i + pivot.first, j + pivot.second);
            for (const auto& [key, dv] : denom.c_) {
                if (key == pivot || dv.is_zero())
                    continue;
                long qi = i + pivot.first - key.first;
                long qj = j + pivot.second - key.second;
                auto it = q.c_.find({qi, qj});
                if (it == q.c_.end())
                    continue;
                acc -= lp_mul(dv, it->second, q.cap_);
            }
            q.set_coeff(i, j, acc.scaled(1 / c0));
        }
    }

    BiSeries recomposed = bs_mul(denom, q);
    long check = std::min(numer.horizon(), recomposed.horizon());
    if (check == kNoCap)
        check = std::max(numer.valid_total_, recomposed.valid_total_);
    if (!bs_equal_up_to(numer, recomposed, check))
        fail(pipeline_error::kind::nonzero_remainder, "exact bivariate division left a remainder");
    q.check_grading("bs_divide_exact");
    return q;
}

bool bs_equal_up_to(const BiSeries& a, const BiSeries& b, long total) {
    for (const auto& [key, p] : a.entries()) {
        if (key.first + key.second > total || p.is_zero())
            continue;
        if (!(b.coeff(key.first, key.second) == p))
            return false;
    }
    for (const auto& [key, p] : b.entries()) {
        if (key.first + key.second > total || p.is_zero())
            continue;
        if (!(a.coeff(key.first, key.second) == p))
            return false;
    }
    return true;
}

}  // namespace telsigma
