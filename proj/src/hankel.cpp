#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/gamma.hpp"
#include "sigmaevo/kernels.hpp"
#include "sigmaevo/parallel.hpp"
#include "sigmaevo/quadrature.hpp"

namespace sigmaevo {

namespace {

// Euler (repeated averaging) transform of the partial sums; returns the
// accelerated limit and the change between the last two levels.
HankelValue euler_limit(std::vector<cplx> s) {
    cplx prev = s.back();
    while (s.size() > 1) {
        prev = s.back();
        for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
        s.pop_back();
    }
    return {s[0], std::abs(s[0] - prev)};
}

// Integral over (0, b] with geometric refinement toward the origin, where the
// integrand may carry an integrable power singularity.
QuadResult integrate_from_origin(const std::function<cplx(double)>& g, double b, int n, double tol) {
    cplx total = 0.0;
    double err = 0.0;
    double hi = b;
    for (int level = 0; level < 200; ++level) {
        const double lo = hi * 0.5;
        const QuadResult piece = integrate_adaptive(g, lo, hi, n, tol, std::abs(total));
        total += piece.value;
        err += piece.error;
        hi = lo;
        if (level > 4 && std::abs(piece.value) <= 1e-17 * std::abs(total)) break;
        if (hi < 1e-300) break;
    }
    return {total, err};
}

}  // namespace

HankelValue hankel_eval(const std::function<cplx(double)>& phi, double nu, double tau, const HankelOptions& opt) {
    if (!(nu > -1.0)) throw DomainError("hankel: order must exceed -1");
    if (!(tau >= 0.0)) throw DomainError("hankel: tau must be non-negative");
    if (tau == 0.0) {
        // (tau rho)^{-nu} J_nu(tau rho) -> 1 / (2^nu Gamma(nu + 1)).
        const double c = std::pow(2.0, -nu) * rgamma(nu + 1.0);
        auto g = [&](double rho) { return phi(rho) * std::pow(rho, 2.0 * nu + 1.0) * c; };
        QuadResult head = integrate_from_origin(g, 1.0, opt.n_nodes, opt.tol);
        cplx total = head.value;
        double err = head.error;
        double a = 1.0;
        int quiet = 0;
        while (a < opt.r_max && quiet < 3) {
            const QuadResult piece = integrate_adaptive(g, a, 2.0 * a, opt.n_nodes, opt.tol, std::abs(total));
            total += piece.value;
            err += piece.error;
            quiet = std::abs(piece.value) <= 1e-16 * std::abs(total) ? quiet + 1 : 0;
            a *= 2.0;
        }
        if (quiet < 3) err += std::abs(total);  // no decay seen before r_max
        return {total, err};
    }
    auto g = [&](double rho) {
        const double x = tau * rho;
        return phi(rho) * (bessel_j(nu, x) * std::pow(x, -nu)) * std::pow(rho, 2.0 * nu + 1.0);
    };
    QuadResult first = integrate_from_origin(g, bessel_zero(nu, 1) / tau, opt.n_nodes, opt.tol);
    std::vector<cplx> partial{first.value};
    double err = first.error;
    int quiet = 0;
    cplx last_acc = NAN;
    double last_change = INFINITY;
    for (int k = 1; k < opt.max_panels; ++k) {
        const double a = bessel_zero(nu, k) / tau;
        const double b = bessel_zero(nu, k + 1) / tau;
        const QuadResult piece = integrate_adaptive(g, a, b, opt.n_nodes, opt.tol, std::abs(partial.back()));
        partial.push_back(partial.back() + piece.value);
        err += piece.error;
        quiet = std::abs(piece.value) <= 1e-16 * std::abs(partial.back()) ? quiet + 1 : 0;
        if (quiet >= 3) return {partial.back(), err + std::abs(piece.value)};
        // Tail by Euler averaging of the last partial sums, checked every 8 panels.
        if (k >= 24 && k % 8 == 0) {
            std::vector<cplx> tail(partial.end() - 24, partial.end());
            const HankelValue acc = euler_limit(tail);
            last_change = std::abs(acc.value - last_acc);
            last_acc = acc.value;
            const double scale = std::max(std::abs(acc.value), 1e-300);
            if (last_change <= 1e-14 * scale && acc.error <= 1e-13 * scale) return {acc.value, err + last_change};
        }
        if (b >= opt.r_max && k >= 24) break;
    }
    std::vector<cplx> tail(partial.end() - std::min<std::size_t>(partial.size(), 24), partial.end());
    HankelValue acc = euler_limit(tail);
    acc.error = err + std::max(acc.error, std::isfinite(last_change) ? last_change : std::abs(acc.value));
    return acc;
}

RadialProfile hankel_transform(const std::function<cplx(double)>& phi, double nu, const std::vector<double>& taus,
                               const HankelOptions& opt) {
    RadialProfile out;
    out.radii = taus;
    out.values.resize(taus.size());
    out.imag.resize(taus.size());
    out.error_est.resize(taus.size());
    out.dim = static_cast<int>(std::lround(2.0 * nu + 2.0));
    out.meta.kind = "hankel";
    parallel_for(taus.size(), [&](std::size_t i) {
        const HankelValue v = hankel_eval(phi, nu, taus[i], opt);
        out.values[i] = v.value.real();
        out.imag[i] = v.value.imag();
        out.error_est[i] = v.error;
    });
    return out;
}

}  // namespace sigmaevo
