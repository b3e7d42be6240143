#include "sigmaevo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "sigmaevo/errors.hpp"

namespace sigmaevo {

std::shared_ptr<const GaussRule> gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const GaussRule>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    auto rule = std::make_shared<GaussRule>();
    rule->x.resize(n);
    rule->w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        rule->x[i] = -z;
        rule->x[n - 1 - i] = z;
        rule->w[i] = rule->w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

using cplx = std::complex<double>;

cplx apply_rule(const GaussRule& r, const std::function<cplx(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    cplx s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(c + h * r.x[i]);
    return s * h;
}

QuadResult adapt(const GaussRule& r, const std::function<cplx(double)>& f, double a, double b, cplx whole, double tol,
                 double floor, int depth) {
    const double m = 0.5 * (a + b);
    const cplx left = apply_rule(r, f, a, m);
    const cplx right = apply_rule(r, f, m, b);
    const cplx both = left + right;
    const double diff = std::abs(both - whole);
    if (diff <= tol * std::max(std::abs(both), floor) || depth <= 0) return {both, diff};
    const QuadResult l = adapt(r, f, a, m, left, tol, floor, depth - 1);
    const QuadResult rr = adapt(r, f, m, b, right, tol, floor, depth - 1);
    return {l.value + rr.value, l.error + rr.error};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<cplx(double)>& f, double a, double b, int n, double tol,
                              double abs_floor, int max_depth) {
    const auto rule = gauss_legendre(n);
    const cplx whole = apply_rule(*rule, f, a, b);
    return adapt(*rule, f, a, b, whole, tol, abs_floor, max_depth);
}

HalfLineResult integrate_half_line(const std::function<double(double)>& g, double cut, double rel_tol) {
    auto gu = [&](double u) {
        const double rho = std::exp(u);
        return g(rho) * rho;
    };
    // Locate the peak on a coarse scan.
    double peak = 0.0, u_peak = 0.0;
    for (double u = -60.0; u <= 60.0; u += 0.5) {
        const double v = std::abs(gu(u));
        if (std::isfinite(v) && v > peak) {
            peak = v;
            u_peak = u;
        }
    }
    if (peak == 0.0) return {};
    HalfLineResult out;
    double lo = u_peak, hi = u_peak;
    while (lo > -745.0 && std::abs(gu(lo)) > cut * peak) lo -= 1.0;
    while (hi < 700.0 && std::abs(gu(hi)) > cut * peak) hi += 1.0;
    out.u_lo = lo;
    out.u_hi = hi;
    out.edge_lo = std::abs(gu(lo));
    out.edge_hi = std::abs(gu(hi));
    auto trap = [&](double h) {
        const int n = static_cast<int>(std::ceil((hi - lo) / h));
        const double hh = (hi - lo) / n;
        double s = 0.5 * (gu(lo) + gu(hi));
        for (int i = 1; i < n; ++i) s += gu(lo + i * hh);
        return s * hh;
    };
    double h = 0.125;
    double prev = trap(h);
    for (int it = 0; it < 6; ++it) {
        h *= 0.5;
        const double cur = trap(h);
        out.step_change = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
        prev = cur;
        if (out.step_change < rel_tol) break;
    }
    out.value = prev;
    return out;
}

}  // namespace sigmaevo
