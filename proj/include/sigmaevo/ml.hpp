#pragma once

#include <complex>

namespace sigmaevo {

using cplx = std::complex<double>;

struct MLParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
};

struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
};

enum class MLMethod { closed_form, series, asymptotic, contour };

const char* to_string(MLMethod m);

// Evaluation regimes and their accuracy targets (relative, double precision):
//   series      |z| <= series_radius(alpha): ~1e-14, degrading to ~1e-12 where
//               the alternating terms cancel (negative z near the radius)
//   asymptotic  gamma = 1, alpha < 1, |arg z| >= alpha*pi, used only when the
//               smallest term is below 1e-16 of the sum
//   contour     inverse Laplace transform on an optimal parabolic contour plus
//               pole residues; ~1e-14 absolute on the integral part
// Anything else (alpha > 2 outside the series disk, non-integer gamma with
// poles in the principal sheet) raises RangeError.
double series_radius(double alpha);
MLMethod ml_method(const MLParams& p, cplx z);

// E_{alpha,beta}(z); p.gamma is ignored.
cplx ml_eval(const MLParams& p, cplx z);
double ml_eval_real(double alpha, double beta, double x);

// E^gamma_{alpha,beta}(z).
cplx ml3_eval(const MLParams& p, cplx z);

// E^2_{alpha,beta}(z) = (E_{alpha,beta-1}(z) + (1+alpha-beta) E_{alpha,beta}(z)) / alpha.
cplx ml2_via_recurrence(double alpha, double beta, cplx z);

// Two-sided bounds on E_{a,1}(-x) (beta = 1) or Gamma(beta) E_{a,beta}(-x).
BoundPair ml_sandwich_bounds(double alpha, double beta, double x);

// c in Gamma(a) E_{a,a}(-x) <= (1 + c x)^{-2}, i.e. Gamma(1+a)/Gamma(1+2a).
// The square root of this ratio fails near x = 0 for a >= 1/2.
double ml_aa_upper_coef(double alpha);

// C/(1+|z|) with C calibrated on a dense sector grid (see podlubny_constant).
double ml_podlubny_bound(double alpha, double beta, cplx z, double theta);

// 1.05 * max over theta <= |arg z| <= pi, |z| <= 1e3 of (1+|z|)|E_{a,b}(z)|.
// Calibrated, not the constant of the existence theorem. Cached per argument triple.
double podlubny_constant(double alpha, double beta, double theta);

namespace detail {
cplx ml_series(double alpha, double beta, double gamma, cplx z);
// Returns false when the expansion cannot reach full precision at z.
bool ml_asymptotic(double alpha, double beta, cplx z, cplx& out);
cplx ml_contour(double alpha, double beta, double gamma, cplx z);
}  // namespace detail

}  // namespace sigmaevo
