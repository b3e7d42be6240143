#include "sigmaevo/gamma.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sigmaevo/errors.hpp"

namespace sigmaevo {

namespace {

// sin(pi x) with exact argument reduction.
double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    return std::sin(std::numbers::pi * r);
}

}  // namespace

bool is_gamma_pole(double x) { return x <= 0.0 && x == std::floor(x); }

double gamma_fn(double x) {
    if (is_gamma_pole(x))
        throw DomainError("gamma: pole at non-positive integer " + std::to_string(x));
    if (x < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (sin_pi(x) * std::tgamma(1.0 - x));
    }
    return std::tgamma(x);
}

double rgamma(double x) {
    if (is_gamma_pole(x)) return 0.0;
    if (x > 170.0) return std::exp(-std::lgamma(x));
    if (x < -170.0) {
        // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
        const double pi = std::numbers::pi;
        const double s = sin_pi(x);
        return s / pi * std::exp(std::lgamma(1.0 - x));
    }
    return 1.0 / gamma_fn(x);
}

}  // namespace sigmaevo
