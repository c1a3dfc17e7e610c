#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telsigma/errors.hpp"
#include "telsigma/integrality.hpp"
#include "telsigma/pipeline.hpp"

using namespace telsigma;

namespace {

LambdaPolynomial sym(const TelescopicData& td, int eq, const ExponentVector& e) {
    auto id = td.symbol_id(eq, e);
    return LambdaPolynomial::symbol(id, td.catalog()[id].weight);
}

// Product of the unit expansions X_i^{k_i} for an even exponent vector;
// odd-index coefficients must land in 2 Z[lambda].
void check_parity_lemma(const std::vector<long>& a, const std::vector<std::vector<long>>& evens) {
    auto td = TelescopicData::validate(a);
    auto cm = build_curve(td);
    const long cap = 11;
    auto es = expand_x(cm, choose_b(td), 11, cap);
    for (const auto& k : evens) {
        TSeries prod = TSeries::monomial(0, LambdaPolynomial::constant(1), 0, cap);
        for (size_t i = 0; i < k.size(); ++i)
            prod = ts_mul(prod, ts_pow(es.x_unit[i], k[i]));
        for (long n = 1; n <= prod.window_end(); n += 2) {
            bool ok = true;
            prod.coeff(n).for_each([&](const LambdaMonomial&, const Rational& c) {
                ok = ok && is_integer(c / 2);
            });
            CHECK(ok);
        }
    }
}

}  // namespace

TEST_CASE("membership basics on (2,3)") {
    auto td = TelescopicData::validate({2, 3});
    RingSpec tilde = RingSpec::make(RingTag::z_lambda_tilde, td);
    RingSpec plain = RingSpec::make(RingTag::z_lambda, td);
    RingSpec rational = RingSpec::make(RingTag::q_lambda, td);

    auto l11 = sym(td, 2, {1, 1});  // weight 1, odd -> halved in lambda~
    CHECK(check_membership(l11.scaled(Rational(1, 2)), tilde));
    Witness w;
    CHECK_FALSE(check_membership(l11.scaled(Rational(1, 3)), tilde, &w));
    CHECK(w.coeff == Rational(1, 3));
    CHECK(check_membership(lp_mul(l11, l11).scaled(Rational(1, 4)), tilde));
    CHECK_FALSE(check_membership(l11.scaled(Rational(1, 2)), plain));
    CHECK(check_membership(l11.scaled(Rational(1, 3)), rational));

    // lambda-bar halves exactly the symbols with two or more odd exponents:
    // on (2,3) that is lambda_{1,1} alone.
    RingSpec bar = RingSpec::make(RingTag::z_lambda_bar, td);
    int halved = 0;
    for (char h : bar.halved)
        halved += h;
    CHECK(halved == 1);
    CHECK(bar.halved[td.symbol_id(2, {1, 1})] == 1);
    // The two rescalings differ: lambda_{0,1} (weight 3, exponents (0,1)) is
    // halved in lambda~ but not in lambda-bar.
    CHECK(tilde.halved[td.symbol_id(2, {0, 1})] == 1);
    CHECK(bar.halved[td.symbol_id(2, {0, 1})] == 0);
}

TEST_CASE("chi condition") {
    CHECK(chi_condition(TelescopicData::validate({2, 3})));
    CHECK(chi_condition(TelescopicData::validate({2, 5})));
    CHECK(chi_condition(TelescopicData::validate({3, 5})));       // any (n,s) curve
    CHECK_FALSE(chi_condition(TelescopicData::validate({4, 6, 5})));  // ell_3 = (1,1,0)
    CHECK(chi_condition(TelescopicData::validate({9, 6, 4})));    // a^{m-i} b^{i-1} family
}

TEST_CASE("verify_theorems passes on (2,3), W = 10") {
    auto r = run_pipeline(CurveSpec{{2, 3}, true, {}, 10, {}, {}});
    auto reports = run_checks(r);
    REQUIRE(reports.size() == 4);
    for (const auto& rep : reports)
        CHECK(rep.verdict == IntegralityReport::Verdict::pass);
    CHECK(exit_code_for(reports) == 0);
}

TEST_CASE("lambda-bar check is skipped when the chi condition fails") {
    auto r = run_pipeline(CurveSpec{{4, 6, 5}, true, {}, 8, {}, {}});
    auto reports = run_checks(r);
    bool found_skip = false;
    for (const auto& rep : reports) {
        if (rep.ring == RingTag::z_lambda_bar) {
            CHECK(rep.verdict == IntegralityReport::Verdict::skipped);
            CHECK_FALSE(rep.note.empty());
            found_skip = true;
        } else {
            CHECK(rep.verdict == IntegralityReport::Verdict::pass);
        }
    }
    CHECK(found_skip);
    CHECK(exit_code_for(reports) == 0);
}

TEST_CASE("negative control: a corrupted coefficient fails with a witness") {
    auto r = run_pipeline(CurveSpec{{2, 3}, true, {}, 6, {}, {}});
    SigmaExpansion corrupted = r.sigma;
    // Poison the u_1 slot (Hurwitz factor 1) with a denominator no ring admits.
    std::vector<long> n{1};
    USeries s(corrupted.series.weights(), corrupted.series.bound(), corrupted.series.cap());
    for (const auto& [e, c] : corrupted.series.terms())
        s.add_term(e, c);
    auto td = r.td;
    s.add_term(n, sym(td, 2, {1, 1}).scaled(Rational(1, 3)));
    corrupted.series = s;
    auto reports = verify_theorems(td, corrupted, r.sigma_sq, r.es.c_series);
    CHECK(exit_code_for(reports) == 1);
    bool witnessed = false;
    for (const auto& rep : reports)
        if (rep.verdict == IntegralityReport::Verdict::fail) {
            REQUIRE_FALSE(rep.witnesses.empty());
            CHECK(rep.witnesses[0].u_exp == n);
            witnessed = true;
        }
    CHECK(witnessed);
}

TEST_CASE("parity lemma: odd coefficients of even power products are even") {
    check_parity_lemma({2, 3}, {{2, 0}, {0, 2}, {2, 2}, {4, 0}});
    check_parity_lemma({2, 5}, {{2, 0}, {0, 2}, {2, 2}});
}

TEST_CASE("2 c_k integral on (2,3) and (2,5)") {
    for (auto a : {std::vector<long>{2, 3}, std::vector<long>{2, 5}}) {
        auto td = TelescopicData::validate(a);
        auto cm = build_curve(td);
        auto es = expand_x(cm, choose_b(td), 12, 12);
        expand_omega(cm, es);
        compute_c_series(cm, es);
        RingSpec plain = RingSpec::make(RingTag::z_lambda, td);
        for (long e = 0; e <= es.c_series.window_end(); ++e)
            CHECK(check_membership(es.c_series.coeff(e).scaled(2), plain));
    }
}
