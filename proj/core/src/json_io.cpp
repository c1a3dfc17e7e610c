#include "telsigma/json_io.hpp"

#include <algorithm>

namespace telsigma {

Json lambda_poly_json(const LambdaPolynomial& p, const TelescopicData& td) {
    Json terms = Json::array();
    p.for_each([&](const LambdaMonomial& m, const Rational& c) {
        Json mono = Json::array();
        for (const auto& [id, mult] : m.factors) {
            const LambdaSymbol& s = td.catalog()[id];
            mono.push_back(Json::array({Json::array({s.eq_index, s.exponents}), mult}));
        }
        terms.push_back(Json{{"coeff", rational_to_string(c)}, {"monomial", mono}});
    });
    return terms;
}

Json semigroup_json(const TelescopicData& td) {
    Json catalog = Json::array();
    for (const auto& s : td.catalog())
        catalog.push_back(Json{{"key", s.name()},
                               {"eq_index", s.eq_index},
                               {"exponents", s.exponents},
                               {"weight", s.weight}});
    Json ell = Json::array();
    for (int i = 1; i < td.m(); ++i)
        ell.push_back(td.ell_row(i));
    return Json{{"a", td.a()},          {"d", td.d()},   {"ell", ell},
                {"gaps", td.gaps()},    {"genus", td.genus()}, {"mu", td.mu()},
                {"lambda_catalog", catalog}};
}

Json d_matrix_json(const DMatrix& d) {
    return Json{{"rows", d.rows}, {"det", d.det}, {"inverse", d.inverse}};
}

Json sigma_json(const SigmaExpansion& se, const TelescopicData& td) {
    // Terms ordered by weighted degree, then exponent; the b vector is kept
    // out so the file is gauge-independent.
    std::vector<const std::pair<const std::vector<long>, LambdaPolynomial>*> order;
    for (const auto& kv : se.series.terms())
        order.push_back(&kv);
    std::sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
        long wx = se.series.u_weight(x->first), wy = se.series.u_weight(y->first);
        if (wx != wy)
            return wx < wy;
        return x->first < y->first;
    });
    Json terms = Json::array();
    for (const auto* kv : order)
        terms.push_back(Json{{"n", kv->first},
                             {"zeta", lambda_poly_json(se.series.hurwitz_coeff(kv->first), td)}});
    return Json{{"curve", se.a}, {"W", se.w_bound}, {"terms", terms}};
}

Json tau_json(const USeries& tau, const TelescopicData& td) {
    Json terms = Json::array();
    for (const auto& [n, c] : tau.terms())
        terms.push_back(Json{{"n", n}, {"zeta", lambda_poly_json(tau.hurwitz_coeff(n), td)}});
    return Json{{"curve", td.a()}, {"W", tau.bound()}, {"terms", terms}};
}

Json q_table_json(const QTable& q, const TelescopicData& td) {
    Json entries = Json::array();
    for (const auto& [key, v] : q.q)
        entries.push_back(
            Json{{"i", key.first}, {"j", key.second}, {"value", lambda_poly_json(v, td)}});
    return Json{{"window", q.window}, {"entries", entries}};
}

Json coeff_table_json(const CoeffTable& t, const TelescopicData& td) {
    Json entries = Json::array();
    for (const auto& [key, v] : t.entries)
        entries.push_back(Json{{"i", key.first},
                               {"j", key.second},
                               {"value", lambda_poly_json(v, td)}});
    return Json{{"total_degree", t.total_degree}, {"entries", entries}};
}

Json omega_json(const ExpansionSet& es, const TelescopicData& td) {
    Json out = Json::array();
    for (size_t i = 0; i < es.omega.size(); ++i) {
        const TSeries& w = es.omega[i];
        Json coeffs = Json::array();
        for (long e = w.min_exp(); e <= w.window_end(); ++e)
            if (!w.coeff(e).is_zero())
                coeffs.push_back(Json{{"exp", e}, {"value", lambda_poly_json(w.coeff(e), td)}});
        out.push_back(Json{{"index", i + 1}, {"gap", td.gaps()[i]}, {"coeffs", coeffs}});
    }
    return out;
}

Json report_json(const IntegralityReport& r, const TelescopicData& td) {
    std::string verdict = r.verdict == IntegralityReport::Verdict::pass      ? "pass"
                          : r.verdict == IntegralityReport::Verdict::skipped ? "skipped"
                                                                             : "fail";
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        Json mono = Json::array();
        for (const auto& [id, mult] : w.monomial.factors) {
            const LambdaSymbol& s = td.catalog()[id];
            mono.push_back(Json::array({Json::array({s.eq_index, s.exponents}), mult}));
        }
        witnesses.push_back(Json{{"u_exp", w.u_exp},
                                 {"monomial", mono},
                                 {"coeff", rational_to_string(w.coeff)},
                                 {"context", w.context}});
    }
    return Json{
        {"ring", ring_name(r.ring)}, {"verdict", verdict}, {"note", r.note}, {"witnesses", witnesses}};
}

std::string dump_canonical(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace telsigma
