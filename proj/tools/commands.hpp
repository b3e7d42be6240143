#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "sigmaevo/solver.hpp"

namespace sigmaevo::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kNumerical = 3 };

struct MlEvalArgs {
    double alpha = 1.0, beta = 1.0, gamma = 1.0;
    double z_re = 0.0, z_im = 0.0;
    std::string z_grid;  // "start:stop:count" along the real axis, shifted by z_im
    std::string out;     // optional CSV path
};

struct KernelArgs {
    std::string kernel = "K";
    double t = 1.0;
    ModelParams params;
    double eta = 0.0, lambda_re = 1.0, lambda_im = 0.0;
    double r_min = 0.05, r_max = 5.0;
    int count = 100;
    double hankel_rmax = 400.0;
    int nodes = 24;
    std::string out;  // path prefix: <out>.csv and <out>.json
};

int cmd_ml_eval(const MlEvalArgs& a, std::ostream& out);
int cmd_kernel(const KernelArgs& a, std::ostream& out);
int cmd_solve(const std::string& problem, const std::string& config_path, const std::string& out_dir, std::ostream& out);
int cmd_verify(const std::string& suite, const std::string& out_dir, std::ostream& out);

// Parsed solve configuration; normalized() echoes every default so the result
// can be fed back through --config.
struct SolveConfig {
    std::string problem;
    ModelParams params;
    Grid grid;
    std::vector<double> times;
    nlohmann::json times_spec, u0, u1, f;
    std::uint64_t seed = 0;
    nlohmann::json normalized() const;
};
SolveConfig parse_solve_config(const nlohmann::json& j, const std::string& problem);

}  // namespace sigmaevo::cli
