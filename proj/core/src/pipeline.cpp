#include "telsigma/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "telsigma/errors.hpp"

namespace telsigma {

CurveSpec CurveSpec::from_json(const Json& j) {
    CurveSpec spec;
    if (!j.contains("a") || !j.at("a").is_array())
        throw validation_error("curve spec: missing integer array field 'a'");
    for (const auto& v : j.at("a"))
        spec.a.push_back(v.get<long>());
    if (!j.contains("W"))
        throw validation_error("curve spec: missing weight bound 'W'");
    spec.w_bound = j.at("W").get<long>();
    if (spec.w_bound < 1)
        throw validation_error("curve spec: W must be positive");

    if (j.contains("lambda")) {
        const Json& l = j.at("lambda");
        if (l.is_string() && l.get<std::string>() == "symbolic") {
            spec.symbolic = true;
        } else if (l.is_object()) {
            spec.symbolic = false;
            for (const auto& [key, val] : l.items()) {
                auto r = rational_from_string(val.get<std::string>());
                if (!r)
                    throw validation_error("curve spec: bad rational for lambda '" + key + "'");
                spec.lambda_values.emplace(key, *r);
            }
        } else {
            throw validation_error("curve spec: 'lambda' must be \"symbolic\" or an object");
        }
    }
    if (j.contains("t_order"))
        spec.t_order = j.at("t_order").get<long>();
    if (j.contains("b")) {
        std::vector<long> b;
        for (const auto& v : j.at("b"))
            b.push_back(v.get<long>());
        spec.b_override = std::move(b);
    }
    return spec;
}

long default_t_order(const TelescopicData& td, long w_bound) {
    return w_bound + 2 * td.genus() + 2 * td.a()[0] + 4;
}

long default_weight_cap(const TelescopicData& td, long w_bound) {
    // Covers sigma/tau (weights <= W) and the full N-matrix window of the
    // bilinear form (q_{w_i,w_j}, weights <= 2(2g-1)). The coefficient tables
    // are exact polynomial data and do not depend on the series cap.
    return std::max(w_bound, 2 * (2 * td.genus() - 1));
}

PipelineResult run_pipeline(const CurveSpec& spec) {
    PipelineResult r;
    r.td = TelescopicData::validate(spec.a);
    r.cm = build_curve(r.td);

    const long w_bound = spec.w_bound;
    long mu_weight = 0;
    for (long p : r.td.mu())
        mu_weight += p;
    if (w_bound < mu_weight)
        throw validation_error("W = " + std::to_string(w_bound) +
                               " cuts below the leading term; need W >= |mu(A_m)| = " +
                               std::to_string(mu_weight));
    r.cap = default_weight_cap(r.td, w_bound);
    long t_order = spec.t_order.value_or(default_t_order(r.td, w_bound));
    if (t_order < r.cap)
        fail(pipeline_error::kind::truncation_exceeded,
             "t_order " + std::to_string(t_order) + " under-truncates the pipeline (needs " +
                 std::to_string(r.cap) + ")");

    BVector b = spec.b_override ? BVector{*spec.b_override} : choose_b(r.td);
    if (spec.b_override) {
        long s = 0;
        for (size_t i = 0; i < spec.a.size(); ++i)
            s += spec.a[i] * b.b[i];
        if (s != -1)
            throw validation_error("b override does not satisfy sum a_i b_i = -1");
    }

    for (int k = 1; k <= r.td.m(); ++k)
        check_det_gk_leading(r.cm, k);

    r.es = expand_x(r.cm, b, t_order, r.cap);
    expand_omega(r.cm, r.es);
    compute_c_series(r.cm, r.es);

    r.tilde_c = tilde_c_table(r.cm);
    r.eta_c = eta_c_table(r.cm, r.tilde_c);
    long q_window = 2 * (2 * r.td.genus() - 1);
    r.q = q_table(r.cm, r.es, r.tilde_c, r.eta_c, std::max(q_window, 2L));

    r.tau = tau_series(r.cm, r.es, w_bound);
    r.bcn = assemble_bcn(r.cm, r.es, r.q);
    r.sigma = sigma_series(r.cm, r.es, r.bcn, r.tau, w_bound);
    r.sigma_sq = sigma_squared(r.sigma);
    check_tau_sigma_round_trip(r.cm, r.bcn, r.tau, r.sigma);
    return r;
}

std::vector<IntegralityReport> run_checks(const PipelineResult& r) {
    return verify_theorems(r.td, r.sigma, r.sigma_sq, r.es.c_series);
}

int exit_code_for(const std::vector<IntegralityReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == IntegralityReport::Verdict::fail)
            return 1;
    return 0;
}

namespace {

// Explicit-lambda jobs run the symbolic pipeline and substitute at export.
std::map<std::uint32_t, Rational> substitution_map(const CurveSpec& spec,
                                                   const TelescopicData& td) {
    std::map<std::uint32_t, Rational> values;
    if (spec.symbolic)
        return values;
    for (std::uint32_t id = 0; id < td.catalog().size(); ++id)
        values[id] = 0;
    for (const auto& [key, val] : spec.lambda_values) {
        bool found = false;
        for (std::uint32_t id = 0; id < td.catalog().size(); ++id)
            if (td.catalog()[id].name() == key) {
                values[id] = val;
                found = true;
                break;
            }
        if (!found)
            throw validation_error("unknown lambda symbol key '" + key + "'");
    }
    return values;
}

SigmaExpansion substituted(const SigmaExpansion& se, const std::map<std::uint32_t, Rational>& vals,
                           const TelescopicData& td) {
    if (vals.empty())
        return se;
    SigmaExpansion out = se;
    USeries s(se.series.weights(), se.series.bound(), se.series.cap());
    for (const auto& [n, c] : se.series.terms())
        s.add_term(n, c.substitute(vals, td.catalog()));
    out.series = std::move(s);
    return out;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw validation_error("cannot write output file " + p.string());
    f << content;
}

}  // namespace

int cmd_info(const CurveSpec& spec, const CliOptions& opt, std::ostream& out, std::ostream& err) {
    (void)opt;
    (void)err;
    TelescopicData td = TelescopicData::validate(spec.a);
    Json j = semigroup_json(td);
    BVector b = spec.b_override ? BVector{*spec.b_override} : choose_b(td);
    j["b"] = b.b;
    j["D"] = d_matrix_json(build_d_matrix(td, b));
    out << dump_canonical(j);
    return 0;
}

int cmd_expand(const CurveSpec& spec, const CliOptions& opt, std::ostream& out, std::ostream& err) {
    (void)err;
    PipelineResult r = run_pipeline(spec);
    auto vals = substitution_map(spec, r.td);
    std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);

    bool all = opt.emit.count("all") > 0;
    write_file(dir / "sigma.json", dump_canonical(sigma_json(substituted(r.sigma, vals, r.td), r.td)));
    Json meta{{"a", r.td.a()},
              {"b", r.es.b.b},
              {"W", spec.w_bound},
              {"t_order", r.es.t_order},
              {"weight_cap", r.cap},
              {"lambda", spec.symbolic ? "symbolic" : "explicit"}};
    write_file(dir / "meta.json", dump_canonical(meta));
    if (all || opt.emit.count("tau"))
        write_file(dir / "tau.json", dump_canonical(tau_json(r.tau, r.td)));
    if (all || opt.emit.count("q")) {
        write_file(dir / "q_table.json", dump_canonical(q_table_json(r.q, r.td)));
        Json tables{{"tilde_c", coeff_table_json(r.tilde_c, r.td)},
                    {"eta_c", coeff_table_json(r.eta_c, r.td)}};
        write_file(dir / "c_tables.json", dump_canonical(tables));
    }
    if (all || opt.emit.count("omega"))
        write_file(dir / "omega.json", dump_canonical(omega_json(r.es, r.td)));
    out << "sigma terms: " << r.sigma.series.terms().size() << "\n";
    return 0;
}

int cmd_check(const CurveSpec& spec, const CliOptions& opt, std::ostream& out, std::ostream& err) {
    (void)err;
    PipelineResult r = run_pipeline(spec);
    auto reports = run_checks(r);

    bool all = opt.check.count("all") > 0;
    auto wanted = [&](const IntegralityReport& rep) {
        if (all)
            return true;
        if (rep.ring == RingTag::z_lambda_tilde)
            return opt.check.count("tilde") > 0;
        if (rep.ring == RingTag::z_lambda_bar)
            return opt.check.count("bar") > 0;
        if (rep.ring == RingTag::z_lambda && rep.note == "sigma^2")
            return opt.check.count("square") > 0;
        return true;  // side checks ride along
    };
    std::vector<IntegralityReport> selected;
    for (const auto& rep : reports)
        if (wanted(rep))
            selected.push_back(rep);

    Json j = Json::array();
    for (const auto& rep : selected)
        j.push_back(report_json(rep, r.td));
    std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "check.json", dump_canonical(j));

    for (const auto& rep : selected) {
        std::string verdict = rep.verdict == IntegralityReport::Verdict::pass      ? "PASS"
                              : rep.verdict == IntegralityReport::Verdict::skipped ? "SKIP"
                                                                                   : "FAIL";
        out << verdict << " " << (rep.note.empty() ? "" : rep.note + " vs ") << ring_name(rep.ring)
            << "\n";
    }
    return exit_code_for(selected);
}

}  // namespace telsigma
