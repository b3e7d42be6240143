#include "sigmaevo/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/gamma.hpp"
#include "sigmaevo/io.hpp"
#include "sigmaevo/kernels.hpp"
#include "sigmaevo/ml.hpp"
#include "sigmaevo/quadrature.hpp"

namespace sigmaevo {

namespace {

constexpr double kPi = std::numbers::pi;

double inv_or_zero(double x) { return std::isinf(x) ? 0.0 : 1.0 / x; }

std::string num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

double sphere_measure(int n) {
    if (n < 1) throw DomainError("sphere_measure: n must be >= 1");
    return 2.0 * std::pow(kPi, 0.5 * n) / gamma_fn(0.5 * n);
}

double young_sharp_constant(double s) {
    if (!(s >= 1.0)) throw DomainError("young_sharp_constant: s must be >= 1");
    if (s == 1.0 || std::isinf(s)) return 1.0;
    const double sp = s / (s - 1.0);
    return std::sqrt(std::pow(s, 1.0 / s) * std::pow(sp, -1.0 / sp));
}

double bessel_sup_bound(int n) {
    if (n < 1) throw DomainError("bessel_sup_bound: n must be >= 1");
    const double nu = 0.5 * n - 1.0;
    const double cap = std::pow(2.0, -nu) * rgamma(nu + 1.0);
    auto f = [&](double z) { return std::abs(bessel_j(nu, z) * std::pow(z, -nu)); };
    double best = nu > -0.5 ? cap : 0.0;  // z -> 0 limit for nu > -1/2
    double zb = 0.0;
    for (int i = 1; i <= 200000; ++i) {
        const double z = 1e-3 * i;
        const double v = f(z);
        if (v > best) best = v, zb = z;
    }
    // Golden-section polish around the best grid point.
    if (zb > 0.0) {
        double a = std::max(1e-6, zb - 1e-3), b = zb + 1e-3;
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        for (int it = 0; it < 80; ++it) {
            const double c = b - g * (b - a), d = a + g * (b - a);
            if (f(c) > f(d)) b = d; else a = c;
        }
        best = std::max(best, f(0.5 * (a + b)));
    }
    if (best > cap * (1.0 + 1e-12)) throw NumericalError("bessel_sup_bound: scan exceeds the Poisson-integral cap");
    return best;
}

double mellin_lhs(double n, double r, double s, double sigma, double a, double b) {
    const double e = (n - r * s) / sigma;
    if (!(sigma > 0.0 && b > 0.0)) throw DomainError("mellin: need sigma > 0 and b > 0");
    if (!(e > 0.0 && e < a)) throw DomainError("mellin: divergent integral, need 0 < (n-rs)/sigma < a");
    const HalfLineResult h = integrate_half_line(
        [&](double rho) { return std::pow(rho, n - r * s - 1.0) * std::pow(1.0 + b * std::pow(rho, sigma), -a); });
    return h.value;
}

double mellin_rhs(double n, double r, double s, double sigma, double a, double b) {
    const double e = (n - r * s) / sigma;
    if (!(sigma > 0.0 && b > 0.0)) throw DomainError("mellin: need sigma > 0 and b > 0");
    if (!(e > 0.0 && e < a)) throw DomainError("mellin: divergent integral, need 0 < (n-rs)/sigma < a");
    return gamma_fn(e) * gamma_fn((a * sigma + r * s - n) / sigma) / (sigma * gamma_fn(a)) * std::pow(b, -e);
}

double mellin2_lhs(double n, double r, double s, double sigma, double b) {
    const double e = (n - r * s) / sigma;
    if (!(sigma > 0.0 && b > 0.0)) throw DomainError("mellin: need sigma > 0 and b > 0");
    if (!(e > 0.0 && e < r)) throw DomainError("mellin: divergent integral, need 0 < (n-rs)/sigma < r");
    const HalfLineResult h = integrate_half_line([&](double rho) {
        return std::pow(rho, n + r * (sigma - s) - 1.0) * std::pow(1.0 + b * std::pow(rho, sigma), -2.0 * r);
    });
    return h.value;
}

double mellin2_rhs(double n, double r, double s, double sigma, double b) {
    const double e = (n - r * s) / sigma;
    if (!(sigma > 0.0 && b > 0.0)) throw DomainError("mellin: need sigma > 0 and b > 0");
    if (!(e > 0.0 && e < r)) throw DomainError("mellin: divergent integral, need 0 < (n-rs)/sigma < r");
    const double k = (n + r * (sigma - s)) / sigma;
    return gamma_fn(k) * gamma_fn((r * (sigma + s) - n) / sigma) / (sigma * gamma_fn(2.0 * r)) * std::pow(b, -k);
}

int lemma_condition(double r, double sigma, int n, double s) {
    if (r == 1.0 && n - sigma < s && s < n) return 1;
    if (s == 0.0 && r > std::max(1.0, n / sigma) && std::isfinite(r)) return 2;
    if (s > 0.0 && s < n && r > std::max(1.0, n / (sigma + s)) && r < n / s) return 3;
    return 0;
}

namespace {

void require_lemma(double r, double sigma, int n, double s, double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError(std::string(who) + ": alpha must lie in (0,1]");
    if (!(sigma > 0.0) || !(r >= 1.0)) throw DomainError(std::string(who) + ": need sigma > 0 and r >= 1");
    if (lemma_condition(r, sigma, n, s) == 0)
        throw RangeError(std::string(who) + ": (r, s) = (" + num(r) + ", " + num(s) +
                         ") meets none of the conditions r = 1 with n - sigma < s < n; "
                         "max(1, n/sigma) < r with s = 0; max(1, n/(sigma+s)) < r < n/s with 0 < s < n");
}

}  // namespace

double C_constant(double r, double sigma, int n, double s, double alpha, double beta, cplx lambda, double theta) {
    require_lemma(r, sigma, n, s, alpha, "C_constant");
    const double e = (n - r * s) / sigma;
    const bool real_pos = lambda.imag() == 0.0 && lambda.real() > 0.0;
    if (real_pos && beta == alpha) {
        const double c = ml_aa_upper_coef(alpha) * lambda.real();
        return gamma_fn(e) * gamma_fn((r * (2.0 * sigma + s) - n) / sigma) / (sigma * gamma_fn(2.0 * r)) *
               std::pow(c, -e);
    }
    if (real_pos && (beta == 1.0 || beta > alpha)) {
        const double c = gamma_fn(beta) / gamma_fn(beta + alpha) * lambda.real();
        return gamma_fn(e) * gamma_fn((r * (sigma + s) - n) / sigma) / (sigma * gamma_fn(r)) * std::pow(c, -e);
    }
    if (lambda == 0.0) throw RangeError("C_constant: lambda = 0 gives a divergent integral");
    if (!(theta > kPi * alpha / 2.0 && theta < kPi * alpha))
        throw RangeError("C_constant: no closed form for this (beta, lambda) without a sector angle theta in "
                         "(pi alpha/2, pi alpha)");
    const double arg_ml = std::abs(std::arg(-lambda));
    if (arg_ml < theta)
        throw RangeError("C_constant: |arg(-lambda)| = " + num(arg_ml) + " is below theta = " + num(theta));
    const double C = podlubny_constant(alpha, beta, theta);
    return std::pow(C * std::abs(gamma_fn(beta)), r) * gamma_fn(e) * gamma_fn((r * (sigma + s) - n) / sigma) /
           (sigma * gamma_fn(r)) * std::pow(std::abs(lambda), -e);
}

double D_constant(double r, double sigma, int n, double s, double alpha, double lambda) {
    require_lemma(r, sigma, n, s, alpha, "D_constant");
    if (!(lambda > 0.0)) throw RangeError("D_constant: closed form needs lambda > 0");
    const double k = (n + r * (sigma - s)) / sigma;
    const double c = ml_aa_upper_coef(alpha) * lambda;
    return gamma_fn(k) * gamma_fn((r * (sigma + s) - n) / sigma) / (sigma * gamma_fn(2.0 * r)) * std::pow(c, -k);
}

namespace {

// (int g)^{1/r} with tail bounds from g <= A rho^{m-1} near 0 and
// g <= A rho^{m-1} (b rho^sigma)^{-a} at infinity.
QuadBound power_quadrature(const std::function<double(double)>& g, double r, double A, double m, double sigma,
                           double a, double b) {
    const HalfLineResult h = integrate_half_line(g, 1e-16, 1e-12);
    const double lo = std::exp(h.u_lo), hi = std::exp(h.u_hi);
    double tail = A * std::pow(lo, m) / m;
    const double k = a * sigma - m;
    tail += k > 0.0 ? A * std::pow(b, -a) * std::pow(hi, -k) / k : INFINITY;
    QuadBound q;
    q.value = std::pow(h.value, 1.0 / r);
    q.tail_bound = std::pow(h.value + tail, 1.0 / r) - q.value;
    return q;
}

}  // namespace

QuadBound ineq_C(double r, double sigma, int n, double s, double alpha, double beta, double lambda, double t) {
    if (!(t > 0.0)) throw DomainError("ineq_C: t must be positive");
    const double C = C_constant(r, sigma, n, s, alpha, beta, lambda);
    const double ta = std::pow(t, alpha);
    const double gb = std::abs(gamma_fn(beta));
    auto g = [&](double rho) {
        const double v = std::abs(std::pow(rho, -s) * ml_eval_real(alpha, beta, -lambda * std::pow(rho, sigma) * ta));
        return std::pow(v, r) * std::pow(rho, n - 1.0);
    };
    const double a = beta == alpha ? 2.0 * r : r;
    const double c = beta == alpha ? ml_aa_upper_coef(alpha)
                                   : gamma_fn(beta) / gamma_fn(beta + alpha);
    QuadBound q = power_quadrature(g, r, std::pow(gb, -r), n - r * s, sigma, a, c * lambda * ta);
    q.rhs = std::pow(C, 1.0 / r) / gb * std::pow(t, -(alpha / sigma) * (n / r - s));
    return q;
}

QuadBound ineq_D(double r, double sigma, int n, double s, double alpha, double lambda, double t) {
    if (!(t > 0.0)) throw DomainError("ineq_D: t must be positive");
    const double D = D_constant(r, sigma, n, s, alpha, lambda);
    const double ta = std::pow(t, alpha);
    const double ga = gamma_fn(alpha);
    auto g = [&](double rho) {
        const double v =
            std::abs(std::pow(rho, sigma - s) * ml_eval_real(alpha, alpha, -lambda * std::pow(rho, sigma) * ta));
        return std::pow(v, r) * std::pow(rho, n - 1.0);
    };
    const double c = ml_aa_upper_coef(alpha);
    QuadBound q = power_quadrature(g, r, std::pow(ga, -r), n + r * (sigma - s), sigma, 2.0 * r, c * lambda * ta);
    q.rhs = std::pow(D, 1.0 / r) / ga * std::pow(t, -(alpha / sigma) * (n / r + sigma - s));
    return q;
}

bool in_region_R12(double p, double q, double eps, int n) {
    if (!(eps > 0.0)) return false;
    const double x = n * inv_or_zero(p), y = n * inv_or_zero(q);
    const double m = std::min<double>(n, eps);
    return 0.5 * n <= x && x < m && std::max(0.0, x - m) < y && y <= x - 0.5 * n;
}

bool in_region_R3(double p, double q, double nu, double eps, int n) {
    if (!(eps > 0.0) || !(nu > 0.0)) return false;
    const double x = n * inv_or_zero(p), y = n * inv_or_zero(q);
    const double m = std::min<double>(n, eps);
    return nu < x && x < m && std::max(0.0, x - m) < y && y <= x - nu;
}

bool in_region_S(double alpha, double sigma, double gamma, int n, SRegion which) {
    switch (which) {
        case SRegion::S0: return 0.0 < gamma && gamma < n && n - gamma < sigma && sigma <= alpha * gamma;
        case SRegion::S12: return 0.0 < gamma && gamma < 0.5 * n && 0.5 * n - gamma < sigma && sigma <= alpha * gamma;
        case SRegion::S3: return 0.5 * n <= gamma && gamma < n && 0.0 < sigma && sigma <= alpha * gamma;
    }
    return false;
}

AssumptionReport check_assumptions(const ModelParams& p, double gamma, double pp, double qq) {
    AssumptionReport r;
    const int n = p.n;
    r.eps = gamma - p.sigma / p.alpha;
    r.nu = gamma - p.sigma / p.alpha * p.beta;
    r.theta = p.alpha / p.sigma * (n * inv_or_zero(pp) - n * inv_or_zero(qq) - r.eps);
    r.case_i = in_region_S(p.alpha, p.sigma, gamma, n, SRegion::S0) && pp == 1.0 && std::isinf(qq);
    r.case_ii = in_region_S(p.alpha, p.sigma, gamma, n, SRegion::S12) && in_region_R12(pp, qq, p.sigma + r.eps, n) &&
                in_region_R12(pp, qq, p.sigma + r.nu, n);
    r.case_iii = in_region_S(p.alpha, p.sigma, gamma, n, SRegion::S3) &&
                 in_region_R3(pp, qq, r.eps, p.sigma + r.eps, n) && in_region_R3(pp, qq, r.nu, p.sigma + r.nu, n);

    const DampingRoots dr = roots(p.mu);
    const double lo = kPi * p.alpha / 2.0;
    bool lit = true, eff = true;
    for (cplx lam : {dr.lambda_plus, dr.lambda_minus}) {
        const bool positive = lam.imag() == 0.0 && lam.real() > 0.0;
        lit = lit && (positive || std::abs(std::arg(lam)) > lo);
        eff = eff && (positive || std::abs(std::arg(-lam)) > lo);
    }
    r.lambda_literal = lit;
    r.lambda_effective = eff;
    if (lit != eff)
        r.notes.push_back("sector condition fails for arg(lambda+-) but holds for arg(-lambda+-), the argument of "
                          "the Mittag-Leffler factors");
    if (in_region_S(p.alpha, p.sigma, gamma, n, SRegion::S0) && !(r.theta < 1.0))
        r.notes.push_back("S0 with (p,q) = (1,inf) gives theta = " + num(r.theta) +
                          " >= 1, so the retarded Beta integral diverges");
    if (!(r.theta > 0.0 && r.theta < 1.0))
        r.notes.push_back("theta = " + num(r.theta) + " is outside (0,1)");
    r.notes.push_back("conditions on f are caller-asserted, not verified from samples");
    return r;
}

nlohmann::json to_json(const AssumptionReport& r) {
    return {{"eps", r.eps},
            {"nu", r.nu},
            {"theta", r.theta},
            {"case_i", r.case_i},
            {"case_ii", r.case_ii},
            {"case_iii", r.case_iii},
            {"lambda_literal", r.lambda_literal},
            {"lambda_effective", r.lambda_effective},
            {"f_verified", r.f_verified},
            {"notes", r.notes}};
}

double fit_decay_exponent(const std::vector<double>& times, const std::vector<double>& norms, std::size_t lo,
                          std::size_t hi) {
    if (times.size() != norms.size()) throw LengthError("fit_decay_exponent: length mismatch");
    hi = std::min(hi, times.size());
    if (hi < lo + 2) throw LengthError("fit_decay_exponent: window needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) {
        if (!(times[i] > 0.0) || !(norms[i] > 0.0)) throw DomainError("fit_decay_exponent: needs positive data");
        const double x = std::log(times[i]), y = std::log(norms[i]);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double den = m * sxx - sx * sx;
    if (den == 0.0) throw DomainError("fit_decay_exponent: times are all equal");
    return (m * sxy - sx * sy) / den;
}

SBound strichartz_s_bound(double p, double q, double gamma, double sigma, double alpha, int n, Problem problem) {
    const double shift = problem == Problem::CP1 ? gamma - sigma / alpha : gamma;
    const double den = alpha / sigma * (n * inv_or_zero(p) - n * inv_or_zero(q) - shift);
    if (!(den > 0.0)) return {INFINITY, true};
    return {1.0 / den, false};
}

double lambda_integral(double theta, double t) {
    if (!(theta > 0.0 && theta < 1.0)) throw DomainError("lambda_integral: theta must lie in (0,1)");
    if (!(t > 0.0)) throw DomainError("lambda_integral: t must be positive");
    const double h = 0.5 * t;
    // tau = h v^{1/theta} on (0, h], t - tau = h w^{1/(1-theta)} on [h, t): both integrands become smooth.
    auto left = [&](double v) {
        const double tau = h * std::pow(v, 1.0 / theta);
        return cplx(std::pow(t - tau, -theta) * std::pow(h, theta) / theta);
    };
    auto right = [&](double w) {
        const double tau = t - h * std::pow(w, 1.0 / (1.0 - theta));
        return cplx(std::pow(tau, theta - 1.0) * std::pow(h, 1.0 - theta) / (1.0 - theta));
    };
    return (integrate_adaptive(left, 0.0, 1.0, 20, 1e-15).value + integrate_adaptive(right, 0.0, 1.0, 20, 1e-15).value)
        .real();
}

double ExponentClaim::predicted() const {
    const double d = n * inv_or_zero(p) - n * inv_or_zero(q);
    switch (setting) {
        case Setting::Lp_Lq: return -(alpha / sigma) * d;
        case Setting::Lp_Wsq: return -alpha - (alpha / sigma) * d;
        case Setting::Wg_Lq: return -(alpha / sigma) * (d - gamma);
        case Setting::Wg_Wsq: return -alpha - (alpha / sigma) * (d - gamma);
    }
    return NAN;
}

void EstimateReport::decide() {
    if (!std::isfinite(measured)) {
        pass = false;
        return;
    }
    pass = relation == "le" ? measured <= predicted + tolerance : std::abs(measured - predicted) <= tolerance;
}

nlohmann::json to_json(const EstimateReport& r) {
    auto finite = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); };
    return {{"id", r.id},
            {"claim", r.claim},
            {"relation", r.relation},
            {"predicted", finite(r.predicted)},
            {"measured", finite(r.measured)},
            {"tolerance", r.tolerance},
            {"pass", r.pass},
            {"detail", r.detail},
            {"artifacts", r.artifacts}};
}

void write_reports(const std::vector<EstimateReport>& reports, const std::string& json_path,
                   const std::string& csv_path) {
    std::vector<EstimateReport> sorted = reports;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : sorted) arr.push_back(to_json(r));
    write_json(json_path, {{"schema_version", kSchemaVersion}, {"reports", arr}});
    std::ostringstream os;
    os << "id,relation,predicted,measured,tolerance,pass\n";
    for (const auto& r : sorted)
        os << r.id << ',' << r.relation << ',' << fmt_num(r.predicted) << ',' << fmt_num(r.measured) << ','
           << fmt_num(r.tolerance) << ',' << (r.pass ? 1 : 0) << '\n';
    write_text(csv_path, os.str());
}

}  // namespace sigmaevo
