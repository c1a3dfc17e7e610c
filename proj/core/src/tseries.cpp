#include "telsigma/tseries.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "telsigma/errors.hpp"

namespace telsigma {

namespace audit {
namespace {
std::atomic<bool> g_enabled{true};
}
bool enabled() {
    return g_enabled.load(std::memory_order_relaxed);
}
void set_enabled(bool on) {
    g_enabled.store(on, std::memory_order_relaxed);
}
}  // namespace audit

namespace {
const LambdaPolynomial kZeroPoly;

void merge_grade(std::optional<long>& dst, bool dst_zero, const std::optional<long>& src,
                 bool src_zero) {
    if (!src)
        return;
    if (!dst) {
        dst = src;
        return;
    }
    if (*dst == *src)
        return;
    // A zero operand is homogeneous of every weight; otherwise mixing grades
    // would silently break joint homogeneity downstream.
    if (dst_zero) {
        dst = src;
        return;
    }
    if (src_zero)
        return;
    fail(pipeline_error::kind::grading_violation,
         "adding series of different grades (" + std::to_string(*dst) + " vs " +
             std::to_string(*src) + ")");
}
}  // namespace

TSeries TSeries::zero(long cap) {
    TSeries s;
    s.cap_ = cap;
    s.exact_tail_ = true;
    return s;
}

TSeries TSeries::monomial(long exp, const LambdaPolynomial& c, std::optional<long> grade, long cap) {
    TSeries s;
    s.min_exp_ = exp;
    s.grade_ = grade;
    s.cap_ = cap;
    s.exact_tail_ = true;
    s.c_.push_back(c);
    s.check_grading("monomial");
    return s;
}

TSeries TSeries::make(long min_exp, std::vector<LambdaPolynomial> coeffs, std::optional<long> grade,
                      long cap, bool exact_tail) {
    TSeries s;
    s.min_exp_ = min_exp;
    s.grade_ = grade;
    s.cap_ = cap;
    s.exact_tail_ = exact_tail;
    s.c_ = std::move(coeffs);
    s.check_grading("make");
    return s;
}

void TSeries::check_grading(const char* where) const {
    if (!grade_ || !audit::enabled())
        return;
    for (size_t k = 0; k < c_.size(); ++k) {
        long w;
        if (!c_[k].is_homogeneous(&w))
            fail(pipeline_error::kind::grading_violation,
                 std::string(where) + ": inhomogeneous coefficient at t^" +
                     std::to_string(min_exp_ + static_cast<long>(k)));
        if (!c_[k].is_zero() && w != min_exp_ + static_cast<long>(k) + *grade_)
            fail(pipeline_error::kind::grading_violation,
                 std::string(where) + ": coefficient weight " + std::to_string(w) +
                     " at t^" + std::to_string(min_exp_ + static_cast<long>(k)) +
                     " contradicts grade " + std::to_string(*grade_));
    }
}

std::optional<long> TSeries::valuation() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero())
            return min_exp_ + static_cast<long>(k);
    return std::nullopt;
}

bool TSeries::is_zero() const {
    return !valuation().has_value() && exact_tail_;
}

bool TSeries::readable(long e) const {
    if (e < min_exp_ || e <= window_end())
        return true;
    if (exact_tail_)
        return true;
    return grade_ && e + *grade_ > cap_;
}

const LambdaPolynomial& TSeries::coeff(long e) const {
    if (e < min_exp_)
        return kZeroPoly;
    if (e <= window_end())
        return c_[static_cast<size_t>(e - min_exp_)];
    if (exact_tail_)
        return kZeroPoly;
    if (grade_ && e + *grade_ > cap_)
        return kZeroPoly;  // identified with 0 in the weight-cap quotient
    fail(pipeline_error::kind::truncation_exceeded,
         "read at t^" + std::to_string(e) + " beyond valid window end t^" +
             std::to_string(window_end()));
}

TSeries& TSeries::operator+=(const TSeries& o) {
    require(cap_ == o.cap_, pipeline_error::kind::cap_mismatch, "adding series with different caps");
    merge_grade(grade_, !valuation().has_value(), o.grade_, !o.valuation().has_value());

    long cov = std::min(coverage(), o.coverage());
    long new_min = std::min(min_exp_, o.min_exp_);
    long new_end = std::min(cov, std::max(window_end(), o.window_end()));
    if (grade_)
        new_end = std::min(new_end, std::max(cap_ - *grade_, new_min - 1));
    std::vector<LambdaPolynomial> out;
    if (new_end >= new_min) {
        out.resize(static_cast<size_t>(new_end - new_min + 1));
        for (long e = new_min; e <= new_end; ++e) {
            LambdaPolynomial v = coeff(e);
            v += o.coeff(e);
            out[static_cast<size_t>(e - new_min)] = std::move(v);
        }
    }
    exact_tail_ = exact_tail_ && o.exact_tail_;
    if (!exact_tail_ && grade_ && cov >= cap_ - *grade_)
        exact_tail_ = true;  // everything beyond the window is above the cap
    min_exp_ = new_min;
    c_ = std::move(out);
    return *this;
}

TSeries TSeries::operator-() const {
    TSeries r = *this;
    for (auto& p : r.c_)
        p = -p;
    return r;
}

TSeries TSeries::shifted(long k) const {
    TSeries r = *this;
    r.min_exp_ += k;
    if (r.grade_)
        *r.grade_ -= k;
    return r;
}

TSeries TSeries::scaled(const Rational& c) const {
    TSeries r = *this;
    for (auto& p : r.c_)
        p = p.scaled(c);
    return r;
}

TSeries TSeries::derivative() const {
    TSeries r;
    r.cap_ = cap_;
    r.exact_tail_ = exact_tail_;
    if (grade_)
        r.grade_ = *grade_ + 1;
    r.min_exp_ = min_exp_ - 1;
    r.c_.resize(c_.size());
    for (size_t k = 0; k < c_.size(); ++k)
        r.c_[k] = c_[k].scaled(Rational(min_exp_ + static_cast<long>(k)));
    return r;
}

TSeries TSeries::truncated(long e) const {
    TSeries r = *this;
    if (e < r.window_end()) {
        long keep = e - r.min_exp_ + 1;
        r.c_.resize(keep < 0 ? 0 : static_cast<size_t>(keep));
        r.exact_tail_ = false;
        if (r.grade_ && e >= cap_ - *r.grade_)
            r.exact_tail_ = true;
    }
    return r;
}

std::string TSeries::to_string(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (long e = min_exp_; e <= window_end() && shown < max_terms; ++e) {
        const auto& p = coeff(e);
        if (p.is_zero())
            continue;
        os << (shown ? " + " : "") << "(" << p.term_count() << "t)" << "*t^" << e;
        ++shown;
    }
    os << " [window " << min_exp_ << ".." << window_end() << (exact_tail_ ? ", exact]" : "]");
    return os.str();
}

TSeries ts_mul(const TSeries& a, const TSeries& b) {
    require(a.cap_ == b.cap_, pipeline_error::kind::cap_mismatch,
            "multiplying series with different caps");
    if (a.is_zero() || b.is_zero())
        return TSeries::zero(a.cap_);

    TSeries r;
    r.cap_ = a.cap_;
    if (a.grade_ && b.grade_)
        r.grade_ = *a.grade_ + *b.grade_;
    r.min_exp_ = a.min_exp_ + b.min_exp_;
    long cov = std::min(a.coverage() == kNoCap ? kNoCap : a.coverage() + b.min_exp_,
                        b.coverage() == kNoCap ? kNoCap : b.coverage() + a.min_exp_);
    long end = std::min(cov, a.window_end() + b.window_end());
    if (r.grade_)
        end = std::min(end, std::max(r.cap_ - *r.grade_, r.min_exp_ - 1));
    r.exact_tail_ = a.exact_tail_ && b.exact_tail_;
    if (!r.exact_tail_ && r.grade_ && cov >= r.cap_ - *r.grade_)
        r.exact_tail_ = true;

    if (end < r.min_exp_) {
        r.c_.clear();
        return r;
    }
    r.c_.assign(static_cast<size_t>(end - r.min_exp_ + 1), LambdaPolynomial{});
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        long ea = a.min_exp_ + static_cast<long>(i);
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero())
                continue;
            long e = ea + b.min_exp_ + static_cast<long>(j);
            if (e > end)
                break;
            r.c_[static_cast<size_t>(e - r.min_exp_)] += lp_mul(a.c_[i], b.c_[j], r.cap_);
        }
    }
    r.check_grading("ts_mul");
    return r;
}

TSeries ts_mul_poly(const TSeries& a, const LambdaPolynomial& p) {
    if (p.is_zero())
        return TSeries::zero(a.cap_);
    long w = 0;
    if (!p.is_homogeneous(&w))
        fail(pipeline_error::kind::grading_violation,
             "series scaled by an inhomogeneous polynomial");
    return ts_mul(a, TSeries::monomial(0, p, w, a.cap()));
}

TSeries ts_pow(const TSeries& a, long n) {
    require(n >= 0, pipeline_error::kind::window_exceeded, "negative power");
    TSeries r = TSeries::monomial(0, LambdaPolynomial::constant(1), 0, a.cap());
    TSeries base = a;
    while (n > 0) {
        if (n & 1)
            r = ts_mul(r, base);
        n >>= 1;
        if (n)
            base = ts_mul(base, base);
    }
    return r;
}

TSeries ts_inverse(const TSeries& a) {
    auto val = a.valuation();
    if (!val)
        fail(pipeline_error::kind::not_a_unit, "inverting a zero (or unknown) series");
    long e0 = *val;
    const LambdaPolynomial& lead = a.coeff(e0);
    if (!lead.is_constant())
        fail(pipeline_error::kind::not_a_unit, "leading coefficient is not a rational constant");
    Rational c0 = lead.constant_part();

    // Write a = c0 t^{e0} (1 + h); invert the unit part order by order.
    // For graded input the lead is weight 0, so grade = -e0 and the relative
    // coefficient at order k is homogeneous of weight k.
    long rel_known = a.coverage() == kNoCap ? kNoCap : a.coverage() - e0;
    long n_max = rel_known;
    bool exact = false;
    if (a.grade_) {
        n_max = std::min(rel_known, a.cap_);
        exact = rel_known >= a.cap_;
    }
    require(n_max >= 0 && n_max < kNoCap, pipeline_error::kind::truncation_exceeded,
            "inverse of an uncapped exact-tail series has no finite representation");

    std::vector<LambdaPolynomial> inv(static_cast<size_t>(n_max) + 1);
    inv[0] = LambdaPolynomial::constant(1);
    for (long k = 1; k <= n_max; ++k) {
        LambdaPolynomial acc;
        for (long j = 1; j <= k; ++j) {
            const LambdaPolynomial& u = a.coeff(e0 + j);
            if (u.is_zero())
                continue;
            acc += lp_mul(u.scaled(1 / c0), inv[static_cast<size_t>(k - j)], a.cap_);
        }
        inv[static_cast<size_t>(k)] = -acc;
    }
    for (auto& p : inv)
        p = p.scaled(1 / c0);

    TSeries r;
    r.cap_ = a.cap_;
    if (a.grade_)
        r.grade_ = -*a.grade_;
    r.min_exp_ = -e0;
    r.exact_tail_ = exact;
    r.c_ = std::move(inv);
    r.check_grading("ts_inverse");
    return r;
}

TSeries ts_divide(const TSeries& a, const TSeries& b) {
    return ts_mul(a, ts_inverse(b));
}

bool ts_equal_up_to(const TSeries& a, const TSeries& b, long e) {
    long lo = std::min(a.min_exp(), b.min_exp());
    for (long k = lo; k <= e; ++k)
        if (!(a.coeff(k) == b.coeff(k)))
            return false;
    return true;
}

}  // namespace telsigma
