#pragma once

#include <string>
#include <vector>

#include "sigmaevo/estimates.hpp"

namespace sigmaevo {

struct VerifyOptions {
    std::string out_dir;  // artifacts (norm tables) go here when non-empty
};

// One report per acceptance check, ids "AC01".."AC12".
EstimateReport check_ml_special_cases();          // AC01
EstimateReport check_sandwich();                  // AC02
EstimateReport check_laplace_identity();          // AC03
EstimateReport check_roots();                     // AC04
EstimateReport check_symbols();                   // AC05
EstimateReport check_residual(const VerifyOptions& opt = {});   // AC06
EstimateReport check_mellin();                    // AC07
EstimateReport check_lemma_inequalities();        // AC08
EstimateReport check_decay(const VerifyOptions& opt = {});      // AC09
EstimateReport check_hankel();                    // AC10
EstimateReport check_retarded(const VerifyOptions& opt = {});   // AC11
EstimateReport check_mixed_norms(const VerifyOptions& opt = {});  // AC12

// Extra checks that are not tied to a numbered criterion.
EstimateReport check_podlubny();
EstimateReport check_region_predicates();
EstimateReport check_assumption_examples();

// Runs the checks of one suite: bounds, mellin, symbols, decay, residual,
// regions, strichartz or all. Reports are sorted by id. Unknown names throw ConfigError.
std::vector<EstimateReport> run_suite(const std::string& name, const VerifyOptions& opt = {});
const std::vector<std::string>& suite_names();

}  // namespace sigmaevo
