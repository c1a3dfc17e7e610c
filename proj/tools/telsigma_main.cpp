// Batch front end: curve-spec ingestion, pipeline runs, table export and
// integrality checking.
//
//   telsigma info   curve.json
//   telsigma expand curve.json [--W N] [--t-order N] [--b "b1,b2,..."]
//                   [--emit sigma|tau|q|omega|all]... [--out DIR]
//   telsigma check  curve.json [--check tilde|bar|square|all]... [--out DIR]
//
// Exit codes: 0 success, 1 failed integrality verdict, 2 invalid input,
// 3 internal pipeline assertion.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "telsigma/errors.hpp"
#include "telsigma/pipeline.hpp"

namespace {

telsigma::CurveSpec load_spec(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw telsigma::validation_error("cannot open curve spec " + path);
    telsigma::Json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw telsigma::validation_error(std::string("curve spec is not valid JSON: ") + e.what());
    }
    return telsigma::CurveSpec::from_json(j);
}

std::vector<long> parse_b(const std::string& s) {
    std::vector<long> b;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        b.push_back(std::stol(item));
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sigma-function expansion and Hurwitz-integrality checks for telescopic curves"};
    app.require_subcommand(1);

    std::string spec_path, out_dir = ".", b_flag;
    long w_flag = 0, t_flag = 0;
    std::vector<std::string> emit_flags, check_flags;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("spec", spec_path, "curve spec JSON file")->required();
        sub->add_option("--W", w_flag, "weight bound override");
        sub->add_option("--t-order", t_flag, "series truncation override");
        sub->add_option("--b", b_flag, "comma-separated b vector override");
        sub->add_option("--out", out_dir, "output directory");
    };
    CLI::App* info = app.add_subcommand("info", "semigroup data, lambda catalog, D matrix");
    add_common(info);
    CLI::App* expand = app.add_subcommand("expand", "run the pipeline and export series");
    add_common(expand);
    expand->add_option("--emit", emit_flags, "sigma|tau|q|omega|all (repeatable)");
    CLI::App* check = app.add_subcommand("check", "verify the integrality theorems");
    add_common(check);
    check->add_option("--check", check_flags, "tilde|bar|square|all (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        telsigma::CurveSpec spec = load_spec(spec_path);
        if (w_flag > 0)
            spec.w_bound = w_flag;
        if (t_flag > 0)
            spec.t_order = t_flag;
        if (!b_flag.empty())
            spec.b_override = parse_b(b_flag);

        telsigma::CliOptions opt;
        opt.out_dir = out_dir;
        if (!emit_flags.empty())
            opt.emit = std::set<std::string>(emit_flags.begin(), emit_flags.end());
        if (!check_flags.empty())
            opt.check = std::set<std::string>(check_flags.begin(), check_flags.end());

        if (info->parsed())
            return telsigma::cmd_info(spec, opt, std::cout, std::cerr);
        if (expand->parsed())
            return telsigma::cmd_expand(spec, opt, std::cout, std::cerr);
        return telsigma::cmd_check(spec, opt, std::cout, std::cerr);
    } catch (const telsigma::validation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const telsigma::pipeline_error& e) {
        std::cerr << "pipeline assertion failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
