#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telsigma/curve.hpp"
#include "telsigma/errors.hpp"

using namespace telsigma;

namespace {

// F with all lambda set to zero: the monomial curve relation.
XPoly monomial_curve_f(const TelescopicData& td, int i) {
    ExponentVector head(static_cast<size_t>(td.m()), 0);
    head[static_cast<size_t>(i)] = td.bound(i);
    XPoly f = XPoly::monomial(head, LambdaPolynomial::constant(1));
    f -= XPoly::monomial(td.ell_row(i), LambdaPolynomial::constant(1));
    return f;
}

LambdaPolynomial sym(const TelescopicData& td, int eq, const ExponentVector& e) {
    auto id = td.symbol_id(eq, e);
    return LambdaPolynomial::symbol(id, td.catalog()[id].weight);
}

}  // namespace

TEST_CASE("build_curve reproduces the printed F_2, F_3 for (4,6,5)") {
    auto td = TelescopicData::validate({4, 6, 5});
    auto cm = build_curve(td);

    XPoly f2 = monomial_curve_f(td, 1);
    for (const ExponentVector& e : std::vector<ExponentVector>{
             {0, 1, 1}, {1, 1, 0}, {1, 0, 1}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 0}})
        f2 -= XPoly::monomial(e, sym(td, 2, e));
    CHECK(cm.F[1] == f2);

    XPoly f3 = monomial_curve_f(td, 2);
    for (const ExponentVector& e : std::vector<ExponentVector>{
             {1, 0, 1}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 0}})
        f3 -= XPoly::monomial(e, sym(td, 3, e));
    CHECK(cm.F[2] == f3);
}

TEST_CASE("build_curve matches the (n,s) template for (2,3)") {
    auto td = TelescopicData::validate({2, 3});
    auto cm = build_curve(td);
    XPoly expect = monomial_curve_f(td, 1);
    for (const ExponentVector& e :
         std::vector<ExponentVector>{{1, 1}, {2, 0}, {0, 1}, {1, 0}, {0, 0}})
        expect -= XPoly::monomial(e, sym(td, 2, e));
    CHECK(cm.F[1] == expect);
}

TEST_CASE("det G_k leading terms") {
    auto td = TelescopicData::validate({2, 3});
    auto cm = build_curve(td);
    // det G_1 = dF_2/dx_2 = 2x_2 - ..., gamma of order 3
    CHECK(check_det_gk_leading(cm, 1) == ExponentVector({0, 1}));
    // det G_2 = dF_2/dx_1 with leading -3x_1^2, gamma of order 4
    CHECK(check_det_gk_leading(cm, 2) == ExponentVector({2, 0}));

    auto td465 = TelescopicData::validate({4, 6, 5});
    auto cm465 = build_curve(td465);
    for (int k = 1; k <= 3; ++k) {
        auto gamma = check_det_gk_leading(cm465, k);
        CHECK(td465.order_of(gamma) ==
              2 * td465.genus() - 1 + td465.a()[static_cast<size_t>(k - 1)]);
    }
}

TEST_CASE("h matrix for m = 2") {
    auto td = TelescopicData::validate({2, 3});
    auto cm = build_curve(td);
    auto h = h_matrix(cm);
    REQUIRE(h.size() == 1);
    // h_{2,2} = x_2 + y_2 - lambda_{1,1} y_1 - lambda_{0,1}
    XPoly expect(4);
    expect += XPoly::variable(4, 1) + XPoly::variable(4, 3);
    expect -= XPoly::monomial({0, 0, 1, 0}, sym(td, 2, {1, 1}));
    expect -= XPoly::constant(4, sym(td, 2, {0, 1}));
    CHECK(h[0][0] == expect);
}

TEST_CASE("h matrix telescopes back to the defining difference") {
    for (auto a : {std::vector<long>{2, 3}, std::vector<long>{4, 6, 5}}) {
        auto td = TelescopicData::validate(a);
        auto cm = build_curve(td);
        auto h = h_matrix(cm);
        const int m = td.m();
        for (int i = 1; i < m; ++i)
            for (int j = 1; j < m; ++j) {
                std::vector<int> hi(static_cast<size_t>(m)), lo(static_cast<size_t>(m));
                for (int v = 0; v < m; ++v) {
                    hi[static_cast<size_t>(v)] = v < j ? m + v : v;
                    lo[static_cast<size_t>(v)] = v <= j ? m + v : v;
                }
                XPoly diff = cm.F[static_cast<size_t>(i)].renamed(hi, 2 * m) -
                             cm.F[static_cast<size_t>(i)].renamed(lo, 2 * m);
                XPoly prod = xp_mul(h[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                                    XPoly::variable(2 * m, j) - XPoly::variable(2 * m, m + j));
                CHECK(prod == diff);
            }
    }
}

TEST_CASE("normal form of x_2^2 on (2,3)") {
    auto td = TelescopicData::validate({2, 3});
    auto cm = build_curve(td);
    NormalForm nf = normal_form(cm, XPoly::monomial({0, 2}, LambdaPolynomial::constant(1)));
    // x_2^2 = x_1^3 + lambda_{1,1} x_1 x_2 + lambda_{2,0} x_1^2 + ...
    REQUIRE(nf.size() == 6);
    CHECK(nf.at(6).is_constant());
    CHECK(nf.at(6).constant_part() == 1);
    CHECK(nf.at(5) == sym(td, 2, {1, 1}));
    CHECK(nf.at(4) == sym(td, 2, {2, 0}));
    CHECK(nf.at(3) == sym(td, 2, {0, 1}));
    CHECK(nf.at(2) == sym(td, 2, {1, 0}));
    CHECK(nf.at(0) == sym(td, 2, {0, 0}));
}

TEST_CASE("normal form is the identity on reduced input") {
    auto td = TelescopicData::validate({4, 6, 5});
    auto cm = build_curve(td);
    XPoly p = XPoly::monomial({3, 1, 1}, LambdaPolynomial::constant(7));
    NormalForm nf = normal_form(cm, p);
    REQUIRE(nf.size() == 1);
    CHECK(nf.begin()->first == td.order_of({3, 1, 1}));
    CHECK(nf.begin()->second.constant_part() == 7);
}

TEST_CASE("normal form on the monomial curve rewrites x_3^2 -> x_1 x_2") {
    auto td = TelescopicData::validate({4, 6, 5});
    auto cm = build_curve(td);
    NormalForm nf = normal_form(cm, XPoly::monomial({0, 0, 2}, LambdaPolynomial::constant(1)));
    CHECK(nf.rbegin()->first == 10);
    CHECK(nf.rbegin()->second.constant_part() == 1);
    std::map<std::uint32_t, Rational> zeros;
    for (std::uint32_t id = 0; id < td.catalog().size(); ++id)
        zeros[id] = 0;
    for (const auto& [order, coeff] : nf) {
        auto v = coeff.substitute(zeros, td.catalog());
        if (order != 10)
            CHECK(v.is_zero());
    }
}

TEST_CASE("normal form weights: rho homogeneous of the order difference") {
    auto td = TelescopicData::validate({4, 6, 5});
    auto cm = build_curve(td);
    ExponentVector e{1, 2, 1};  // out of bound in x_2
    long order = td.order_of(e);
    NormalForm nf = normal_form(cm, XPoly::monomial(e, LambdaPolynomial::constant(1)));
    for (const auto& [o, coeff] : nf) {
        long w;
        CHECK(coeff.is_homogeneous(&w));
        CHECK(w == order - o);
        coeff.for_each([&](const LambdaMonomial&, const Rational& c) { CHECK(is_integer(c)); });
    }
    CHECK(nf.rbegin()->first == order);
    CHECK(nf.rbegin()->second.constant_part() == 1);
}

TEST_CASE("h entries specialize to partials in the linear-variable case") {
    // F_2 of (4,6,5) is linear in x_3, so h_{2,3}|_{y=x} = dF_2/dx_3.
    auto td = TelescopicData::validate({4, 6, 5});
    auto cm = build_curve(td);
    auto h = h_matrix(cm);
    const int m = 3;
    std::vector<int> diag(static_cast<size_t>(2 * m));
    for (int v = 0; v < m; ++v) {
        diag[static_cast<size_t>(v)] = v;
        diag[static_cast<size_t>(m + v)] = v;  // y_i -> x_i
    }
    XPoly specialized = h[0][1].renamed(diag, m);
    CHECK(specialized == cm.partials[1][2]);
}
