#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "sigmaevo/spectral.hpp"

namespace sigmaevo {

// Periodic box [-L/2, L/2)^n with `points` nodes per axis.
struct Grid {
    int n = 1;
    int points = 64;
    double length = 6.283185307179586;

    void validate() const;  // n in 1..3, points a power of two >= 2, length > 0
    std::size_t size() const;
    double dx() const { return length / points; }
    double coord(int i) const { return -0.5 * length + i * dx(); }
    // Signed wave number index in [-N/2, N/2) along one axis.
    int wave_index(int i) const { return i < points / 2 ? i : i - points; }
    // Sum of squared wave indices of a flat (row-major) index; |xi| = (2 pi/L) sqrt(key).
    long key(std::size_t flat) const;
    double xi_abs(std::size_t flat) const;
};

using Point = std::array<double, 3>;

// Samples on a Grid together with coefficients c_k such that
// u(x_j) = sum_k c_k exp(i k . x_j); a plane wave has coefficient 1.
class SpectralField {
public:
    SpectralField() = default;
    static SpectralField from_physical(const Grid& g, std::vector<cplx> values);
    static SpectralField from_spectral(const Grid& g, std::vector<cplx> coeffs);
    static SpectralField from_function(const Grid& g, const std::function<cplx(const Point&)>& f);

    const Grid& grid() const { return grid_; }
    const std::vector<cplx>& physical() const { return phys_; }
    const std::vector<cplx>& spectral() const { return spec_; }
    Point point(std::size_t flat) const;

private:
    Grid grid_;
    std::vector<cplx> phys_;
    std::vector<cplx> spec_;
};

// Multiplies coefficients by |xi|^gamma.
SpectralField frac_laplacian(const SpectralField& f, double gamma);

// Multiplies coefficients by |xi|^eta E_{alpha,beta}(-lambda |xi|^sigma t^alpha)
// (the zero mode keeps E(0) = 1/Gamma(beta) and 0^eta with 0^0 = 1).
SpectralField apply_ml_multiplier(const SpectralField& f, double t, double alpha, double beta, double sigma,
                                  cplx lambda, double eta = 0.0);

// Source sampled at the solver output times. An empty source means f = 0.
struct Source {
    std::vector<SpectralField> samples;
    bool zero() const { return samples.empty(); }
};

Source sample_source(const Grid& g, const std::vector<double>& times,
                     const std::function<cplx(double, const Point&)>& f);

struct Trajectory {
    std::vector<double> times;
    std::vector<SpectralField> states;
    ModelParams params;
    std::string problem;  // "cp1" or "cp2"
    SpectralField velocity;  // u1 for cp2, empty for cp1
};

// Homogeneous parts are evaluated directly at each time (any increasing
// times >= 0). With a non-zero source the times must be uniform from 0, and the
// retarded integral uses the product trapezoid for (t - tau)^{beta-1}.
Trajectory solve_cp1(const SpectralField& u0, const Source& f, const ModelParams& p, const std::vector<double>& times);
Trajectory solve_cp2(const SpectralField& u0, const SpectralField& u1, const Source& f, const ModelParams& p,
                     const std::vector<double>& times);

std::vector<double> uniform_times(double t_end, int n_steps);

struct ResidualOptions {
    // Residual is taken over t >= window_start * T; the first steps of the
    // discrete Caputo operators carry an O(1) start-up error on solutions that
    // behave like t^{2 alpha} near 0.
    double window_start = 0.25;
};

// max over the window and all modes of
//   |D^{2a} u + mu |xi|^sigma D^a u + |xi|^{2 sigma} u - I^{beta-2a} f|
// divided by max|u0^| + max|u1^| + max|f^| (0 for zero data). For cp2 the
// order-2a derivative uses u1 as the slope at t = 0.
double residual_cp(const Trajectory& traj, const Source& f, const ResidualOptions& opt = {});

double lq_norm(const SpectralField& f, double q);
double sobolev_seminorm(const SpectralField& f, double gamma, double q);
// (int_0^T ||u(t)||_q^s dt)^{1/s} by the trapezoid rule on traj.times; s = inf is the sup.
double mixed_norm(const Trajectory& traj, double s, double q);
double mixed_norm(const std::vector<double>& times, const std::vector<double>& norms, double s);
std::vector<double> norm_series(const Trajectory& traj, double q);

// One CSV per time (x[,y,z],re,im) plus manifest.json.
void write_trajectory(const Trajectory& traj, const std::string& dir);
void write_norm_table(const std::string& path, const std::vector<double>& times, const std::vector<double>& values);

}  // namespace sigmaevo
