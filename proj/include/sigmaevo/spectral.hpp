#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace sigmaevo {

using cplx = std::complex<double>;

struct ModelParams {
    double alpha = 0.5;
    double beta = 1.0;
    double sigma = 2.0;
    double mu = 3.0;
    int n = 1;
};

// Checks alpha in (0,1], 2 alpha <= beta < 2 alpha + 1, sigma > 0, mu > 0, n in 1..3.
void validate(const ModelParams& p);

enum class DampingBranch { underdamped, critical, overdamped };

const char* to_string(DampingBranch b);

struct DampingRoots {
    cplx lambda_plus;
    cplx lambda_minus;
    double mu = 2.0;
    DampingBranch branch = DampingBranch::critical;
};

// Roots of s^2 - mu s + 1, i.e. lambda_+ lambda_- = 1, lambda_+ + lambda_- = mu.
DampingRoots roots(double mu);

// Half-width of the band |mu - 2| < kNearCritical evaluated through the
// coalesced-root formulas.
inline constexpr double kNearCritical = 1e-8;

cplx laplace_symbol_M(cplx s, double xi_abs, const ModelParams& p);
cplx laplace_symbol_U0(cplx s, double xi_abs, const ModelParams& p);
cplx laplace_symbol_U1(cplx s, double xi_abs, const ModelParams& p);

// Poles of the three Laplace symbols in the principal sheet (zeros of the
// denominator s^{2a} + mu v s^a + v^2 with v = |xi|^sigma).
std::vector<cplx> symbol_poles(double xi_abs, const ModelParams& p);

// Time-domain multipliers: N (data u0), M (source), J (data u1).
cplx symbol_N_hat(double t, double xi_abs, const ModelParams& p);
cplx symbol_M_hat(double t, double xi_abs, const ModelParams& p);
cplx symbol_J_hat(double t, double xi_abs, const ModelParams& p);

// M_hat(t) / t^{beta-1}: bounded at t = 0 where it equals 1/Gamma(beta).
cplx symbol_M_reduced(double t, double xi_abs, const ModelParams& p);

struct TalbotOptions {
    int n_nodes = 48;
    // Contour s(theta) = shift + r (theta cot theta + i nu theta), r = n_nodes / (5 t).
    double shift = 0.0;
    double nu = 1.0;
};

// Options that place the given singularities inside the contour.
TalbotOptions talbot_options_for(const std::vector<cplx>& singularities, double t, int n_nodes = 48);

// Numerical inverse Laplace transform at t > 0 by fixed-Talbot quadrature.
cplx talbot_invert(const std::function<cplx(cplx)>& F, double t, const TalbotOptions& opt = {});
cplx talbot_invert(const std::function<cplx(cplx)>& F, double t, int n_nodes);

}  // namespace sigmaevo
