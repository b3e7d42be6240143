#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "sigmaevo/errors.hpp"
#include "sigmaevo/verify.hpp"

using namespace sigmaevo;

namespace {

int report_error(bool json, int code, const std::string& type, const std::string& msg) {
    if (json)
        std::cerr << nlohmann::json{{"error", {{"code", code}, {"type", type}, {"message", msg}}}}.dump() << '\n';
    else
        std::cerr << "error: " << msg << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sigmaevo: Mittag-Leffler functions, kernels, spectral solvers and estimate checks"};
    app.require_subcommand(1);
    bool json_errors = false;
    app.add_flag("--json-errors", json_errors, "Write errors as JSON to stderr");

    cli::MlEvalArgs ml;
    auto* ml_cmd = app.add_subcommand("ml-eval", "Evaluate E^gamma_{alpha,beta}(z)");
    ml_cmd->add_option("--alpha", ml.alpha)->required();
    ml_cmd->add_option("--beta", ml.beta)->required();
    ml_cmd->add_option("--gamma", ml.gamma);
    auto* zre = ml_cmd->add_option("--z-re", ml.z_re);
    ml_cmd->add_option("--z-im", ml.z_im);
    auto* zgrid = ml_cmd->add_option("--z-grid", ml.z_grid, "start:stop:count on the real axis");
    zre->excludes(zgrid);
    ml_cmd->add_option("--out", ml.out, "CSV output path");

    std::string problem, config, solve_out;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a Cauchy problem from a JSON config");
    solve_cmd->add_option("problem", problem)->required()->check(CLI::IsMember({"cp1", "cp2"}));
    solve_cmd->add_option("--config", config)->required();
    solve_cmd->add_option("--out", solve_out, "Output directory")->required();

    std::string suite, verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_option("--out", verify_out, "Report directory");

    cli::KernelArgs ka;
    auto* kernel_cmd = app.add_subcommand("kernel", "Radial kernel profile via the Hankel transform");
    kernel_cmd->add_option("--kernel", ka.kernel)->check(CLI::IsMember({"K", "N", "M", "J"}));
    kernel_cmd->add_option("--t", ka.t);
    kernel_cmd->add_option("--alpha", ka.params.alpha);
    kernel_cmd->add_option("--beta", ka.params.beta);
    kernel_cmd->add_option("--sigma", ka.params.sigma);
    kernel_cmd->add_option("--mu", ka.params.mu);
    kernel_cmd->add_option("--n", ka.params.n);
    kernel_cmd->add_option("--eta", ka.eta, "K only");
    kernel_cmd->add_option("--lambda-re", ka.lambda_re, "K only");
    kernel_cmd->add_option("--lambda-im", ka.lambda_im, "K only");
    kernel_cmd->add_option("--r-min", ka.r_min);
    kernel_cmd->add_option("--r-max", ka.r_max);
    kernel_cmd->add_option("--count", ka.count);
    kernel_cmd->add_option("--hankel-rmax", ka.hankel_rmax);
    kernel_cmd->add_option("--nodes", ka.nodes);
    kernel_cmd->add_option("--out", ka.out, "Output prefix (<out>.csv, <out>.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error(json_errors, cli::kBadInput, "ArgumentError", e.what());
    }

    try {
        if (*ml_cmd) return cli::cmd_ml_eval(ml, std::cout);
        if (*solve_cmd) return cli::cmd_solve(problem, config, solve_out, std::cout);
        if (*verify_cmd) return cli::cmd_verify(suite, verify_out, std::cout);
        if (*kernel_cmd) return cli::cmd_kernel(ka, std::cout);
    } catch (const ConfigError& e) {
        return report_error(json_errors, cli::kBadInput, "ConfigError", e.what());
    } catch (const DomainError& e) {
        return report_error(json_errors, cli::kBadInput, "DomainError", e.what());
    } catch (const LengthError& e) {
        return report_error(json_errors, cli::kBadInput, "LengthError", e.what());
    } catch (const RangeError& e) {
        return report_error(json_errors, cli::kNumerical, "RangeError", e.what());
    } catch (const NumericalError& e) {
        return report_error(json_errors, cli::kNumerical, "NumericalError", e.what());
    } catch (const nlohmann::json::exception& e) {
        return report_error(json_errors, cli::kBadInput, "ConfigError", e.what());
    } catch (const std::exception& e) {
        return report_error(json_errors, cli::kNumerical, "Error", e.what());
    }
    return cli::kBadInput;
}
