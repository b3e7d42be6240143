#include <cstdio>
#include <functional>
#include <vector>

#include "sigmaevo/verify.hpp"

using namespace sigmaevo;

int main() {
    const std::vector<std::function<EstimateReport()>> checks = {
        check_ml_special_cases, check_sandwich, check_laplace_identity, check_roots,
        check_symbols, [] { return check_residual(); }, check_mellin, check_lemma_inequalities,
        [] { return check_decay(); }, check_hankel, [] { return check_retarded(); },
        [] { return check_mixed_norms(); },
    };
    std::vector<EstimateReport> out;
    for (const auto& c : checks) {
        try {
            out.push_back(c());
        } catch (const std::exception& e) {
            EstimateReport r;
            r.id = "AC??";
            r.detail = std::string("exception: ") + e.what();
            out.push_back(r);
        }
    }
    int failed = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        std::printf("AC%zu %s %s\n", k + 1, out[k].pass ? "PASS" : "FAIL", out[k].detail.c_str());
        failed += !out[k].pass;
    }
    std::fflush(stdout);
    return failed ? 1 : 0;
}
