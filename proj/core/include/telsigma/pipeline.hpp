#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "telsigma/integrality.hpp"
#include "telsigma/json_io.hpp"
#include "telsigma/sigma.hpp"

namespace telsigma {

// One curve job: sequence, coefficient mode, weight bound and optional
// overrides. Fully deterministic; no configuration outside this struct.
struct CurveSpec {
    std::vector<long> a;
    bool symbolic = true;
    std::map<std::string, Rational> lambda_values;  // by symbol key "i:j1,...,jm"
    long w_bound = 0;
    std::optional<long> t_order;
    std::optional<std::vector<long>> b_override;

    static CurveSpec from_json(const Json& j);
};

long default_t_order(const TelescopicData& td, long w_bound);
long default_weight_cap(const TelescopicData& td, long w_bound);

struct PipelineResult {
    TelescopicData td;
    CurveModel cm;
    ExpansionSet es;
    CoeffTable tilde_c;
    CoeffTable eta_c;
    QTable q;
    BcnData bcn;
    USeries tau;
    SigmaExpansion sigma;
    SigmaExpansion sigma_sq;
    long cap = 0;
};

// Full run with every internal assertion active.
PipelineResult run_pipeline(const CurveSpec& spec);

std::vector<IntegralityReport> run_checks(const PipelineResult& r);

// Exit-code contract: 0 all applicable checks pass, 1 some verdict failed.
int exit_code_for(const std::vector<IntegralityReport>& reports);

// In-process CLI commands (the binary is a thin wrapper; keeps the
// exit-code and golden-file behavior directly testable).
struct CliOptions {
    std::optional<long> w_bound;
    std::optional<long> t_order;
    std::optional<std::vector<long>> b_override;
    std::set<std::string> emit{"sigma"};   // sigma, tau, q, omega, all
    std::set<std::string> check{"all"};    // tilde, bar, square, all
    std::string out_dir = ".";
};

int cmd_info(const CurveSpec& spec, const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_expand(const CurveSpec& spec, const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const CurveSpec& spec, const CliOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace telsigma
