#include "sigmaevo/ml.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/gamma.hpp"

namespace sigmaevo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesR0 = 5.0;

// Neumaier compensated accumulator.
struct CompensatedSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            c += (sum - t) + x;
        else
            c += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + c; }
};

void check_params(const MLParams& p, cplx z) {
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha))
        throw DomainError("Mittag-Leffler: alpha must be positive, got " + std::to_string(p.alpha));
    if (!std::isfinite(p.beta) || !std::isfinite(p.gamma))
        throw DomainError("Mittag-Leffler: beta and gamma must be finite");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("Mittag-Leffler: non-finite argument");
}

bool has_principal_poles(double alpha, cplx z) {
    return std::abs(std::arg(z)) < std::min(kPi, alpha * kPi);
}

}  // namespace

const char* to_string(MLMethod m) {
    switch (m) {
        case MLMethod::closed_form: return "closed_form";
        case MLMethod::series: return "series";
        case MLMethod::asymptotic: return "asymptotic";
        case MLMethod::contour: return "contour";
    }
    return "?";
}

double series_radius(double alpha) { return std::max(1.0, std::min(kSeriesR0, std::pow(3.0, alpha))); }

namespace detail {

cplx ml_series(double a, double b, double g, cplx z) {
    const bool real_arg = z.imag() == 0.0;
    const double absz = std::abs(z);
    const double logabsz = std::log(absz);
    const double argz = std::arg(z);
    // Terms decrease monotonically once a k + b is past the minimum of Gamma
    // and (a k + b)^a exceeds 2|z|.
    const double k_settle = (std::max(std::pow(2.0 * absz, 1.0 / a), 1.5) - b) / a;

    CompensatedSum re, im;
    double ck = 1.0;  // (g)_k / k!
    int quiet = 0;
    for (int k = 0; k < 50000; ++k) {
        if (k > 0) {
            ck *= (g + k - 1.0) / k;
            if (ck == 0.0) break;  // g is a non-positive integer: polynomial
        }
        if (k == 0) {
            re.add(rgamma(b));
            continue;
        }
        const double rg = rgamma(a * k + b);
        if (rg == 0.0 && a * k + b <= 0.0) continue;  // pole of Gamma: the term vanishes
        const double coef = ck * rg;
        // Past Gamma overflow use lgamma for the magnitude.
        const double mag = rg != 0.0 ? std::exp(k * logabsz + std::log(std::abs(coef)))
                                     : std::exp(k * logabsz + std::log(std::abs(ck)) - boost::math::lgamma(a * k + b));
        const double sgn = (ck < 0.0) != (rg < 0.0) ? -1.0 : 1.0;
        double tr, ti;
        if (real_arg) {
            tr = sgn * mag * ((z.real() < 0.0 && (k & 1)) ? -1.0 : 1.0);
            ti = 0.0;
        } else {
            tr = sgn * mag * std::cos(k * argz);
            ti = sgn * mag * std::sin(k * argz);
        }
        re.add(tr);
        im.add(ti);
        const double total = std::hypot(re.value(), im.value());
        if (k > k_settle && (mag <= 1e-17 * total || mag < 1e-300)) {
            if (++quiet >= 3) return {re.value(), im.value()};
        } else {
            quiet = 0;
        }
    }
    throw RangeError("Mittag-Leffler series did not converge at |z|=" + std::to_string(absz));
}

bool ml_asymptotic(double a, double b, cplx z, cplx& out) {
    // E_{a,b}(z) = -sum_{k>=1} z^{-k}/Gamma(b - a k) for |arg z| >= a pi, a < 1.
    // Stopping decisions use the envelope Gamma(1-x)/pi >= |1/Gamma(x)|, x < 0.5,
    // so terms that vanish near poles of Gamma do not end the sum early.
    const cplx w = 1.0 / z;
    const double log_w = -std::log(std::abs(z));
    cplx wk = 1.0;
    cplx sum = 0.0;
    double min_env = INFINITY;
    double prev_env = INFINITY;
    for (int k = 1; k < 5000; ++k) {
        wk *= w;
        const double x = b - a * k;
        const double log_g = x > 0.5 ? -std::log(std::abs(gamma_fn(x))) : std::lgamma(1.0 - x) - std::log(kPi);
        const double env = std::exp(k * log_w + log_g);
        if (env > prev_env) break;  // past the smallest term
        prev_env = env;
        min_env = std::min(min_env, env);
        sum -= wk * rgamma(x);
        if (env <= 1e-17 * std::abs(sum)) break;
    }
    if (!(min_env <= 1e-16 * std::abs(sum))) return false;
    out = sum;
    return true;
}

}  // namespace detail

MLMethod ml_method(const MLParams& p, cplx z) {
    check_params(p, z);
    if (z == 0.0 || p.gamma == 0.0) return MLMethod::closed_form;
    if (p.gamma == 1.0 && p.alpha == 1.0 && p.beta == 1.0) return MLMethod::closed_form;
    if (std::abs(z) <= series_radius(p.alpha)) return MLMethod::series;
    if (p.gamma == 1.0 && p.alpha < 1.0 && !has_principal_poles(p.alpha, z)) {
        cplx tmp;
        if (detail::ml_asymptotic(p.alpha, p.beta, z, tmp)) return MLMethod::asymptotic;
    }
    return MLMethod::contour;
}

cplx ml3_eval(const MLParams& p, cplx z) {
    const MLMethod m = ml_method(p, z);
    switch (m) {
        case MLMethod::closed_form:
            if (z == 0.0 || p.gamma == 0.0) return rgamma(p.beta);
            return std::exp(z);
        case MLMethod::series:
            return detail::ml_series(p.alpha, p.beta, p.gamma, z);
        case MLMethod::asymptotic: {
            cplx out;
            detail::ml_asymptotic(p.alpha, p.beta, z, out);
            if (z.imag() == 0.0) out.imag(0.0);
            return out;
        }
        case MLMethod::contour: {
            if (p.alpha > 2.0)
                throw RangeError("Mittag-Leffler: alpha > 2 is supported only for |z| <= " +
                                 std::to_string(series_radius(p.alpha)));
            return detail::ml_contour(p.alpha, p.beta, p.gamma, z);
        }
    }
    throw RangeError("Mittag-Leffler: no evaluation method");
}

cplx ml_eval(const MLParams& p, cplx z) { return ml3_eval({p.alpha, p.beta, 1.0}, z); }

double ml_eval_real(double alpha, double beta, double x) { return ml_eval({alpha, beta, 1.0}, x).real(); }

cplx ml2_via_recurrence(double alpha, double beta, cplx z) {
    if (!(beta > 1.0)) throw DomainError("ml2_via_recurrence: beta must exceed 1, got " + std::to_string(beta));
    const cplx e1 = ml_eval({alpha, beta - 1.0, 1.0}, z);
    const cplx e0 = ml_eval({alpha, beta, 1.0}, z);
    return (e1 + (1.0 + alpha - beta) * e0) / alpha;
}

double ml_aa_upper_coef(double alpha) { return gamma_fn(1.0 + alpha) / gamma_fn(1.0 + 2.0 * alpha); }

BoundPair ml_sandwich_bounds(double alpha, double beta, double x) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("sandwich bounds: alpha must lie in (0,1], got " + std::to_string(alpha));
    if (!(x >= 0.0)) throw DomainError("sandwich bounds: x must be non-negative");
    if (beta == 1.0) {
        const double lower = alpha == 1.0 ? 0.0 : 1.0 / (1.0 + gamma_fn(1.0 - alpha) * x);
        const double upper = 1.0 / (1.0 + x / gamma_fn(1.0 + alpha));
        return {x == 0.0 ? 1.0 : lower, upper};
    }
    if (beta == alpha) {
        const double cl = std::sqrt(gamma_fn(1.0 - alpha) / gamma_fn(1.0 + alpha));
        const double cu = ml_aa_upper_coef(alpha);
        const double l = 1.0 + cl * x;
        const double u = 1.0 + cu * x;
        return {1.0 / (l * l), 1.0 / (u * u)};
    }
    if (beta > alpha) {
        const double gb = gamma_fn(beta);
        const double lower = 1.0 / (1.0 + gamma_fn(beta - alpha) / gb * x);
        const double upper = 1.0 / (1.0 + gb / gamma_fn(beta + alpha) * x);
        return {lower, upper};
    }
    throw DomainError("sandwich bounds: unsupported case beta=" + std::to_string(beta) +
                      " (need beta = 1, beta = alpha or beta > alpha)");
}

double podlubny_constant(double alpha, double beta, double theta) {
    static std::mutex mtx;
    static std::map<std::tuple<double, double, double>, double> cache;
    const auto key = std::make_tuple(alpha, beta, theta);
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    double best = std::abs(rgamma(beta));
    const int n_mod = 241, n_arg = 25;
    for (int i = 0; i < n_mod; ++i) {
        const double r = std::pow(10.0, -3.0 + 6.0 * i / (n_mod - 1));
        for (int j = 0; j < n_arg; ++j) {
            const double phi = theta + (kPi - theta) * j / (n_arg - 1);
            const cplx z = std::polar(r, phi);
            const double v = (1.0 + r) * std::abs(ml_eval({alpha, beta, 1.0}, z));
            best = std::max(best, v);
        }
    }
    const double c = 1.05 * best;
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, c);  // concurrent duplicates compute the same value
    return c;
}

double ml_podlubny_bound(double alpha, double beta, cplx z, double theta) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw DomainError("Podlubny bound: alpha must lie in (0,2]");
    if (!(theta > kPi * alpha / 2.0 && theta < std::min(kPi, kPi * alpha)))
        throw DomainError("Podlubny bound: theta must satisfy pi*alpha/2 < theta < min(pi, pi*alpha)");
    const double a = std::abs(std::arg(z));
    if (z != 0.0 && a < theta)
        throw DomainError("Podlubny bound: |arg z| = " + std::to_string(a) + " is outside the sector [theta, pi]");
    return podlubny_constant(alpha, beta, theta) / (1.0 + std::abs(z));
}

}  // namespace sigmaevo
