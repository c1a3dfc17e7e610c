#include "telsigma/integrality.hpp"

#include "telsigma/errors.hpp"
#include "telsigma/sigma.hpp"
#include "telsigma/tseries.hpp"

namespace telsigma {

std::string ring_name(RingTag tag) {
    switch (tag) {
        case RingTag::z_lambda:
            return "Z[lambda]";
        case RingTag::z_lambda_tilde:
            return "Z[lambda~]";
        case RingTag::z_lambda_bar:
            return "Z[lambda-]";
        case RingTag::q_lambda:
            return "Q[lambda]";
    }
    return "?";
}

RingSpec RingSpec::make(RingTag tag, const TelescopicData& td) {
    RingSpec spec;
    spec.tag = tag;
    spec.halved.assign(td.catalog().size(), 0);
    for (size_t i = 0; i < td.catalog().size(); ++i) {
        const LambdaSymbol& s = td.catalog()[i];
        if (tag == RingTag::z_lambda_tilde) {
            spec.halved[i] = (s.weight % 2 != 0) ? 1 : 0;
        } else if (tag == RingTag::z_lambda_bar) {
            long odd = 0;
            for (long e : s.exponents)
                odd += (e % 2 != 0) ? 1 : 0;
            spec.halved[i] = (odd >= 2) ? 1 : 0;
        }
    }
    return spec;
}

bool check_membership(const LambdaPolynomial& p, const RingSpec& ring, Witness* witness) {
    if (ring.tag == RingTag::q_lambda)
        return true;
    bool ok = true;
    p.for_each([&](const LambdaMonomial& m, const Rational& c) {
        if (!ok)
            return;
        unsigned long halvings = 0;
        if (ring.tag != RingTag::z_lambda)
            for (const auto& [id, mult] : m.factors)
                if (ring.halved[id])
                    halvings += mult;
        if (!is_integer_after_doubling(c, halvings)) {
            ok = false;
            if (witness) {
                witness->monomial = m;
                witness->coeff = c;
            }
        }
    });
    return ok;
}

bool chi_condition(const TelescopicData& td) {
    for (int i = 1; i < td.m(); ++i) {
        long odd = 0;
        for (long e : td.ell_row(i))
            odd += (e % 2 != 0) ? 1 : 0;
        if (odd > 1)
            return false;
    }
    return true;
}

namespace {

IntegralityReport check_series(RingTag tag, const TelescopicData& td, const USeries& s,
                               const std::string& context) {
    IntegralityReport report;
    report.ring = tag;
    report.note = context;
    RingSpec ring = RingSpec::make(tag, td);
    for (const auto& [n, c] : s.terms()) {
        Witness w;
        if (!check_membership(s.hurwitz_coeff(n), ring, &w)) {
            w.u_exp = n;
            w.context = context;
            report.witnesses.push_back(std::move(w));
        }
    }
    report.verdict = report.witnesses.empty() ? IntegralityReport::Verdict::pass
                                              : IntegralityReport::Verdict::fail;
    return report;
}

}  // namespace

std::vector<IntegralityReport> verify_theorems(const TelescopicData& td,
                                               const SigmaExpansion& sigma,
                                               const SigmaExpansion& sigma_sq,
                                               const TSeries& c_series) {
    std::vector<IntegralityReport> reports;
    reports.push_back(check_series(RingTag::z_lambda_tilde, td, sigma.series, "sigma"));
    reports.push_back(check_series(RingTag::z_lambda, td, sigma_sq.series, "sigma^2"));
    if (chi_condition(td)) {
        reports.push_back(check_series(RingTag::z_lambda_bar, td, sigma.series, "sigma"));
    } else {
        IntegralityReport skipped;
        skipped.ring = RingTag::z_lambda_bar;
        skipped.verdict = IntegralityReport::Verdict::skipped;
        skipped.note = "chi condition fails: some ell-row has two or more odd entries";
        reports.push_back(std::move(skipped));
    }
    // Side check: 2 c_k integral for every computed k.
    {
        IntegralityReport r;
        r.ring = RingTag::z_lambda;
        r.note = "2*c_k";
        RingSpec ring = RingSpec::make(RingTag::z_lambda, td);
        for (long e = std::max(c_series.min_exp(), 0L); e <= c_series.window_end(); ++e) {
            Witness w;
            if (!check_membership(c_series.coeff(e).scaled(2), ring, &w)) {
                w.u_exp = {e + 1};
                w.context = "2*c_k";
                r.witnesses.push_back(std::move(w));
            }
        }
        r.verdict = r.witnesses.empty() ? IntegralityReport::Verdict::pass
                                        : IntegralityReport::Verdict::fail;
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace telsigma
