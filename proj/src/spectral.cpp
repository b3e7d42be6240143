#include "sigmaevo/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/gamma.hpp"
#include "sigmaevo/ml.hpp"

namespace sigmaevo {

namespace {

cplx E(double a, double b, cplx z) { return ml_eval({a, b, 1.0}, z); }

bool coalesced(double mu) {
    if (mu == 2.0) return false;
    if (std::abs(mu - 2.0) < kNearCritical) {
        warn("mu=" + std::to_string(mu) + " is within 1e-8 of the critical value; using the coalesced-root formulas");
        return true;
    }
    return false;
}

bool use_critical(double mu) { return mu == 2.0 || coalesced(mu); }

double vt(double t, double xi_abs, const ModelParams& p) { return std::pow(xi_abs, p.sigma) * std::pow(t, p.alpha); }

// [l+ E_{a,b}(-l+ x) - l- E_{a,b}(-l- x)] / (l+ - l-)
cplx two_root_difference(const DampingRoots& r, double a, double b, double x) {
    if (r.branch == DampingBranch::underdamped) {
        // Conjugate roots: the bracket is 2i Im(l+ E+) over 2i Im(l+).
        const cplx lp = r.lambda_plus;
        return (lp * E(a, b, -lp * x)).imag() / lp.imag();
    }
    const double lp = r.lambda_plus.real(), lm = r.lambda_minus.real();
    return (lp * E(a, b, -lp * x).real() - lm * E(a, b, -lm * x).real()) / (lp - lm);
}

}  // namespace

const char* to_string(DampingBranch b) {
    switch (b) {
        case DampingBranch::underdamped: return "underdamped";
        case DampingBranch::critical: return "critical";
        case DampingBranch::overdamped: return "overdamped";
    }
    return "?";
}

void validate(const ModelParams& p) {
    if (!(p.alpha > 0.0 && p.alpha <= 1.0)) throw ConfigError("alpha must lie in (0,1], got " + std::to_string(p.alpha));
    if (!(2.0 * p.alpha <= p.beta && p.beta < 2.0 * p.alpha + 1.0))
        throw ConfigError("beta must satisfy 2*alpha <= beta < 2*alpha + 1, got beta=" + std::to_string(p.beta));
    if (!(p.sigma > 0.0)) throw ConfigError("sigma must be positive");
    if (!(p.mu > 0.0)) throw ConfigError("mu must be positive");
    if (p.n < 1 || p.n > 3) throw ConfigError("dimension n must be 1, 2 or 3");
}

DampingRoots roots(double mu) {
    if (!(mu > 0.0)) throw DomainError("roots: mu must be positive, got " + std::to_string(mu));
    DampingRoots r;
    r.mu = mu;
    const double h = mu / 2.0;
    if (mu < 2.0) {
        const double w = std::sqrt((1.0 - h) * (1.0 + h));
        r.lambda_plus = {h, w};
        r.lambda_minus = {h, -w};
        r.branch = DampingBranch::underdamped;
    } else if (mu == 2.0) {
        r.lambda_plus = r.lambda_minus = 1.0;
        r.branch = DampingBranch::critical;
    } else {
        const double big = h + std::sqrt((h - 1.0) * (h + 1.0));
        r.lambda_plus = big;
        r.lambda_minus = 1.0 / big;  // avoids cancellation in h - sqrt(h^2-1)
        r.branch = DampingBranch::overdamped;
    }
    return r;
}

cplx laplace_symbol_M(cplx s, double xi_abs, const ModelParams& p) {
    const double v = std::pow(xi_abs, p.sigma);
    const cplx sa = std::pow(s, p.alpha);
    return std::pow(s, 2.0 * p.alpha - p.beta) / (sa * sa + p.mu * v * sa + v * v);
}

cplx laplace_symbol_U0(cplx s, double xi_abs, const ModelParams& p) {
    const double v = std::pow(xi_abs, p.sigma);
    const cplx sa = std::pow(s, p.alpha);
    return (sa * sa + p.mu * v * sa) / (s * (sa * sa + p.mu * v * sa + v * v));
}

cplx laplace_symbol_U1(cplx s, double xi_abs, const ModelParams& p) {
    const double v = std::pow(xi_abs, p.sigma);
    const cplx sa = std::pow(s, p.alpha);
    return sa * sa / (s * s * (sa * sa + p.mu * v * sa + v * v));
}

std::vector<cplx> symbol_poles(double xi_abs, const ModelParams& p) {
    std::vector<cplx> out;
    const double v = std::pow(xi_abs, p.sigma);
    if (v == 0.0) return out;
    const DampingRoots r = roots(p.mu);
    const double pi = std::numbers::pi;
    for (cplx lam : {r.lambda_plus, r.lambda_minus}) {
        // s^a = -lam v; principal-sheet solutions need |arg| < pi.
        const cplx w = -lam * v;
        const double th = std::arg(w);
        for (int k = -2; k <= 2; ++k) {
            const double ang = (th + 2.0 * pi * k) / p.alpha;
            if (ang > -pi && ang <= pi) out.push_back(std::polar(std::pow(std::abs(w), 1.0 / p.alpha), ang));
        }
        if (r.branch != DampingBranch::underdamped && r.lambda_plus == r.lambda_minus) break;
    }
    return out;
}

cplx symbol_N_hat(double t, double xi_abs, const ModelParams& p) {
    if (!(t >= 0.0)) throw DomainError("symbol_N_hat: t must be non-negative");
    if (xi_abs == 0.0 || t == 0.0) return 1.0;
    const double x = vt(t, xi_abs, p);
    const double a = p.alpha;
    if (use_critical(p.mu)) return E(a, 1.0, -x) + (x / a) * E(a, a, -x);
    const DampingRoots r = roots(p.mu);
    if (r.branch == DampingBranch::underdamped) {
        const cplx lp = r.lambda_plus;
        return 2.0 * (E(a, 1.0, -lp * x) / (1.0 - lp * lp)).real();
    }
    const double lp = r.lambda_plus.real(), lm = r.lambda_minus.real();
    return E(a, 1.0, -lp * x).real() / (1.0 - lp * lp) + E(a, 1.0, -lm * x).real() / (1.0 - lm * lm);
}

cplx symbol_M_reduced(double t, double xi_abs, const ModelParams& p) {
    if (!(t >= 0.0)) throw DomainError("symbol_M_hat: t must be non-negative");
    if (xi_abs == 0.0 || t == 0.0) return rgamma(p.beta);
    const double x = vt(t, xi_abs, p);
    const double a = p.alpha, b = p.beta;
    if (use_critical(p.mu)) return (E(a, b - 1.0, -x) + (1.0 + a - b) * E(a, b, -x)) / a;
    return two_root_difference(roots(p.mu), a, b, x);
}

cplx symbol_M_hat(double t, double xi_abs, const ModelParams& p) {
    if (!(t > 0.0)) throw DomainError("symbol_M_hat: t must be positive");
    return std::pow(t, p.beta - 1.0) * symbol_M_reduced(t, xi_abs, p);
}

cplx symbol_J_hat(double t, double xi_abs, const ModelParams& p) {
    if (!(t >= 0.0)) throw DomainError("symbol_J_hat: t must be non-negative");
    if (t == 0.0) return 0.0;
    if (xi_abs == 0.0) return t;
    const double x = vt(t, xi_abs, p);
    const double a = p.alpha;
    if (use_critical(p.mu)) return (t / a) * (E(a, 1.0, -x) + (a - 1.0) * E(a, 2.0, -x));
    return t * two_root_difference(roots(p.mu), a, 2.0, x);
}

}  // namespace sigmaevo
