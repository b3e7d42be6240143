#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace sigmaevo {

struct TimeGrid {
    double t0 = 0.0;
    double dt = 1.0;
    int n_steps = 1;

    double t(int k) const { return t0 + k * dt; }
    double t_end() const { return t(n_steps); }
};

struct TimeSeries {
    TimeGrid grid;
    std::vector<std::complex<double>> values;  // n_steps + 1 samples

    static TimeSeries sample(const TimeGrid& g, const std::function<std::complex<double>(double)>& f);
};

// t^{nu-1}/Gamma(nu).
double memory_kernel(double nu, double t);

// Product-trapezoid Riemann-Liouville integral of order gamma in [0,1);
// exact for piecewise-linear data. gamma = 0 returns the input.
TimeSeries rl_integral(const TimeSeries& f, double gamma);

// Same quadrature for any order gamma > 0 (used for the retarded solver term).
// Returns w[j], j = 0..n, with I^gamma f(t_n) = sum_j w[j] f_j.
std::vector<double> rl_weights(double gamma, int n, double dt);

// Caputo derivative of order gamma in (0,2].
//   (0,1): L1 scheme, order 2-gamma
//   1, 2:  central second-order differences (one-sided at the ends)
//   (1,2): L1 scheme of order gamma-1 applied to f', with f' taken from
//          half-step differences and slope0 = f'(0). The scheme lives on the
//          half steps; node values are interpolated (extrapolated at the last
//          node). Order 3-gamma at fixed t > 0. Without slope0 a one-sided
//          second-order estimate of f'(0) is used.
TimeSeries caputo_deriv(const TimeSeries& f, double gamma,
                        std::optional<std::complex<double>> slope0 = std::nullopt);

// Advertised convergence order on smooth data.
double caputo_order(double gamma);

}  // namespace sigmaevo
