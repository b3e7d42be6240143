#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "sigmaevo/spectral.hpp"

namespace sigmaevo {

struct KernelMeta {
    std::string kind;  // "K", "N", "M", "J" or "hankel"
    double t = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double sigma = 0.0;
    double eta = 0.0;
    cplx lambda = 0.0;
    double mu = 0.0;
};

struct RadialProfile {
    std::vector<double> radii;
    std::vector<double> values;
    std::vector<double> imag;       // imaginary parts (zero for real kernels)
    std::vector<double> error_est;  // quadrature truncation estimate per radius
    int dim = 1;
    KernelMeta meta;
};

// J_nu(x) for nu > -1, x >= 0; closed forms at nu = +-1/2.
double bessel_j(double nu, double x);

// k-th positive zero (k >= 1) of J_nu, from a shared immutable table.
double bessel_zero(double nu, int k);

struct HankelOptions {
    // Panels between Bessel zeros are summed until Euler averaging of the last
    // partial sums settles, or until r_max is passed; the unresolved part is
    // reported in HankelValue::error.
    double r_max = 400.0;
    int n_nodes = 24;      // Gauss-Legendre points per panel
    int max_panels = 4000;
    double tol = 1e-13;    // relative panel tolerance for adaptive bisection
};

struct HankelValue {
    cplx value;
    double error = 0.0;
};

// int_0^inf phi(rho) (tau rho)^{-nu} J_nu(tau rho) rho^{2 nu + 1} d rho.
HankelValue hankel_eval(const std::function<cplx(double)>& phi, double nu, double tau, const HankelOptions& opt = {});

RadialProfile hankel_transform(const std::function<cplx(double)>& phi, double nu, const std::vector<double>& taus,
                               const HankelOptions& opt = {});

// (2 pi)^{-n/2} H_{n/2-1}[rho^eta E_{a,b}(-lambda rho^sigma t^a)](r).
RadialProfile kernel_K(double t, const std::vector<double>& radii, double eta, double alpha, double beta,
                       double sigma, cplx lambda, int n, const HankelOptions& opt = {});

RadialProfile kernel_N(double t, const std::vector<double>& radii, const ModelParams& p, const HankelOptions& opt = {});
RadialProfile kernel_M(double t, const std::vector<double>& radii, const ModelParams& p, const HankelOptions& opt = {});
RadialProfile kernel_J(double t, const std::vector<double>& radii, const ModelParams& p, const HankelOptions& opt = {});

// omega_{n-1} * int K(r) r^{n-1} dr by the trapezoid rule over the stored radii.
double radial_mass(const RadialProfile& k);

// (omega_{n-1} * int |K(r)|^q r^{n-1} dr)^{1/q} by the trapezoid rule; q = inf gives max |K|.
double radial_lq_norm(const RadialProfile& k, double q);

void write_profile_csv(const RadialProfile& k, const std::string& path);
void write_profile_meta(const RadialProfile& k, const std::string& path);

}  // namespace sigmaevo
