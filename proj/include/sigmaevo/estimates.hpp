#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigmaevo/spectral.hpp"

namespace sigmaevo {

// 2 pi^{n/2} / Gamma(n/2).
double sphere_measure(int n);

// sqrt(s^{1/s} s'^{-1/s'}), 1/s + 1/s' = 1; 1 at s = 1 and s = inf.
double young_sharp_constant(double s);

// sup_{z > 0} |z^{1-n/2} J_{n/2-1}(z)| from a dense scan plus the z -> 0 limit,
// checked against the cap 1/(2^nu Gamma(nu+1)).
double bessel_sup_bound(int n);

// int_0^inf rho^{n-rs-1} (1 + b rho^sigma)^{-a} d rho; needs 0 < (n-rs)/sigma < a.
double mellin_lhs(double n, double r, double s, double sigma, double a, double b);
double mellin_rhs(double n, double r, double s, double sigma, double a, double b);
// int_0^inf rho^{n+r(sigma-s)-1} (1 + b rho^sigma)^{-2r} d rho; needs 0 < (n-rs)/sigma < r.
double mellin2_lhs(double n, double r, double s, double sigma, double b);
double mellin2_rhs(double n, double r, double s, double sigma, double b);

// Which of the three (r, s) conditions shared by the two L^r lemmas holds:
// 1: r = 1, n - sigma < s < n; 2: max(1, n/sigma) < r, s = 0;
// 3: max(1, n/(sigma+s)) < r < n/s, 0 < s < n; 0: none.
int lemma_condition(double r, double sigma, int n, double s);

// Closed-form constant bounding int |rho^{-s} E_{a,b}(-lambda rho^sigma t^a)|^r rho^{n-1}.
// Branches: lambda >= 0 with beta = alpha; lambda >= 0 with beta = 1 or beta > alpha;
// otherwise the sector branch with the calibrated Podlubny constant for theta
// (requires pi alpha/2 < theta < pi alpha and theta <= |arg(-lambda)|).
double C_constant(double r, double sigma, int n, double s, double alpha, double beta, cplx lambda,
                  double theta = -1.0);
// Same for |rho^{sigma-s} E_{a,a}(-lambda rho^sigma t^a)|^r, lambda > 0.
double D_constant(double r, double sigma, int n, double s, double alpha, double lambda);

struct QuadBound {
    double value = 0.0;       // (integral)^{1/r}
    double tail_bound = 0.0;  // bound on the truncated tails, same units
    double rhs = 0.0;         // closed-form right-hand side
};
QuadBound ineq_C(double r, double sigma, int n, double s, double alpha, double beta, double lambda, double t);
QuadBound ineq_D(double r, double sigma, int n, double s, double alpha, double lambda, double t);

bool in_region_R12(double p, double q, double eps, int n);
bool in_region_R3(double p, double q, double nu, double eps, int n);

enum class SRegion { S0, S12, S3 };
bool in_region_S(double alpha, double sigma, double gamma, int n, SRegion which);

struct AssumptionReport {
    double eps = 0.0;    // gamma - sigma/alpha
    double nu = 0.0;     // gamma - (sigma/alpha) beta
    double theta = 0.0;  // (alpha/sigma)(n/p - n/q - eps), exponent of the retarded bound
    bool case_i = false, case_ii = false, case_iii = false;
    bool lambda_literal = false;    // sector condition on arg(lambda+-) as written
    bool lambda_effective = false;  // the same condition on arg(-lambda+-), the ML argument
    bool f_verified = false;        // conditions on f are caller-asserted
    std::vector<std::string> notes;
    bool any_case() const { return case_i || case_ii || case_iii; }
};
AssumptionReport check_assumptions(const ModelParams& p, double gamma, double pp, double qq);
nlohmann::json to_json(const AssumptionReport& r);

// Least-squares slope of log(norms) against log(times) over indices [lo, hi).
double fit_decay_exponent(const std::vector<double>& times, const std::vector<double>& norms, std::size_t lo,
                          std::size_t hi);

enum class Problem { CP1, CP2 };
struct SBound {
    double value = 0.0;
    bool unbounded = false;  // non-positive denominator: every s >= 1 admissible
};
SBound strichartz_s_bound(double p, double q, double gamma, double sigma, double alpha, int n, Problem problem);

// int_0^t (t - tau)^{-theta} tau^{theta-1} d tau by quadrature, theta in (0,1).
double lambda_integral(double theta, double t);

enum class Setting { Lp_Lq, Lp_Wsq, Wg_Lq, Wg_Wsq };
struct ExponentClaim {
    Setting setting = Setting::Lp_Lq;
    double alpha = 0.5, beta = 1.0, sigma = 2.0, gamma = 0.0, p = 1.0, q = INFINITY;
    int n = 1;
    double predicted() const;
};

struct EstimateReport {
    std::string id;
    std::string claim;
    std::string relation = "eq";  // "eq": |measured - predicted| <= tol; "le": measured <= predicted + tol
    double predicted = 0.0;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
    std::vector<std::string> artifacts;

    void decide();
};
nlohmann::json to_json(const EstimateReport& r);
void write_reports(const std::vector<EstimateReport>& reports, const std::string& json_path,
                   const std::string& csv_path);

}  // namespace sigmaevo
