#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

namespace sigmaevo {

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

// Shared immutable n-point Gauss-Legendre rule.
std::shared_ptr<const GaussRule> gauss_legendre(int n);

struct QuadResult {
    std::complex<double> value;
    double error = 0.0;
};

// Adaptive bisection with an n-point rule; stops when the two-half estimate
// agrees with the whole-interval estimate to tol * max(|value|, abs_floor).
QuadResult integrate_adaptive(const std::function<std::complex<double>(double)>& f, double a, double b, int n,
                              double tol, double abs_floor = 0.0, int max_depth = 30);

// int_0^inf g(rho) d rho for integrands with power-law behaviour at both ends,
// via rho = e^u and the trapezoid rule on u (exponentially convergent). The
// u-range grows until the integrand drops below cut * peak on both sides.
struct HalfLineResult {
    double value = 0.0;
    double u_lo = 0.0;
    double u_hi = 0.0;
    double edge_lo = 0.0;  // integrand (in u) at the truncation points
    double edge_hi = 0.0;
    double step_change = 0.0;  // |I(h) - I(h/2)| / |I(h/2)|
};
// Step halving stops once successive results agree to rel_tol.
HalfLineResult integrate_half_line(const std::function<double(double)>& g, double cut = 1e-16, double rel_tol = 1e-14);

}  // namespace sigmaevo
