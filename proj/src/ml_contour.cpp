// Mittag-Leffler evaluation by numerical inversion of the Laplace transform
// s^{a g - b} / (s^a - z)^g at t = 1 along optimal parabolic contours
// s(u) = mu (1 + i u)^2, with the poles of the principal sheet that fall to the
// right of the contour added as residues (Garrappa, SIAM J. Numer. Anal. 2015).

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/ml.hpp"

namespace sigmaevo::detail {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogEps = std::log(std::numeric_limits<double>::epsilon());
constexpr double kInf = std::numeric_limits<double>::infinity();

struct ContourParams {
    double mu = 0.0;
    double h = 0.0;
    double n = kInf;
};

// Region bounded on the right by the next singularity.
ContourParams optimal_bounded(double t, double phi_j, double phi_j1, double pj, double qj, double log_tol) {
    const double fac = 1.01;
    const double f_max = std::exp(log_tol - kLogEps);
    const double sq_j = std::sqrt(phi_j);
    const double threshold = 2.0 * std::sqrt((log_tol - kLogEps) / t);
    const double sq_j1 = std::min(std::sqrt(phi_j1), threshold - sq_j);

    double sqbar_j = 0.0, sqbar_j1 = 0.0, f_bar = 1.0;
    bool admissible = false;
    if (pj < 1e-14 && qj < 1e-14) {
        sqbar_j = sq_j;
        sqbar_j1 = sq_j1;
        admissible = true;
    } else if (pj < 1e-14) {
        sqbar_j = sq_j;
        const double f_min = sq_j > 0.0 ? fac * std::pow(sq_j / (sq_j1 - sq_j), qj) : fac;
        if (f_min < f_max) {
            f_bar = f_min + f_min / f_max * (f_max - f_min);
            const double fq = std::pow(f_bar, -1.0 / qj);
            sqbar_j1 = (2.0 * sq_j1 - fq * sq_j) / (2.0 + fq);
            admissible = true;
        }
    } else if (qj < 1e-14) {
        sqbar_j1 = sq_j1;
        const double f_min = fac * std::pow(sq_j1 / (sq_j1 - sq_j), pj);
        if (f_min < f_max) {
            f_bar = f_min + f_min / f_max * (f_max - f_min);
            const double fp = std::pow(f_bar, -1.0 / pj);
            sqbar_j = (2.0 * sq_j + fp * sq_j1) / (2.0 - fp);
            admissible = true;
        }
    } else {
        double f_min = fac * (sq_j + sq_j1) / std::pow(sq_j1 - sq_j, std::max(pj, qj));
        if (f_min < f_max) {
            f_min = std::max(f_min, 1.5);
            f_bar = f_min + f_min / f_max * (f_max - f_min);
            const double fp = std::pow(f_bar, -1.0 / pj);
            const double fq = std::pow(f_bar, -1.0 / qj);
            const double w = -phi_j1 * t / log_tol;
            const double den = 2.0 + w - (1.0 + w) * fp + fq;
            sqbar_j = ((2.0 + w + fq) * sq_j + fp * sq_j1) / den;
            sqbar_j1 = (-(1.0 + w) * fq * sq_j + (2.0 + w - (1.0 + w) * fp) * sq_j1) / den;
            admissible = true;
        }
    }
    if (!admissible) return {};
    const double le = log_tol - std::log(f_bar);
    const double w = -sqbar_j1 * sqbar_j1 * t / le;
    ContourParams out;
    out.mu = std::pow(((1.0 + w) * sqbar_j + sqbar_j1) / (2.0 + w), 2);
    out.h = -2.0 * kPi / le * (sqbar_j1 - sqbar_j) / ((1.0 + w) * sqbar_j + sqbar_j1);
    out.n = std::ceil(std::sqrt(1.0 - le / t / out.mu) / out.h);
    return out;
}

// Right-unbounded region beyond the last singularity.
ContourParams optimal_unbounded(double t, double phi_j, double pj, double log_tol) {
    const double sq_j = std::sqrt(phi_j);
    double phibar = phi_j > 0.0 ? phi_j * 1.01 : 0.01;
    double sqbar = std::sqrt(phibar);
    const double f_min = 1.0, f_max = 10.0, f_tar = 5.0;
    double n = 0.0, a = 0.0, sq_mu = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double phi_t = phibar * t;
        const double lept = log_tol / phi_t;
        n = std::ceil(phi_t / kPi * (1.0 - 1.5 * lept + std::sqrt(1.0 - 2.0 * lept)));
        a = kPi * n / phi_t;
        sq_mu = sqbar * std::abs(4.0 - a) / std::abs(7.0 - std::sqrt(1.0 + 12.0 * a));
        const double fbar = std::pow((sqbar - sq_j) / sq_mu, -pj);
        if (pj < 1e-14 || (f_min < fbar && fbar < f_max)) break;
        sqbar = std::pow(f_tar, -1.0 / pj) * sq_mu + sq_j;
        phibar = sqbar * sqbar;
    }
    ContourParams out;
    out.mu = sq_mu * sq_mu;
    out.h = (-3.0 * a - 2.0 + 2.0 * std::sqrt(1.0 + 12.0 * a)) / (4.0 - a) / n;
    out.n = n;
    const double threshold = (log_tol - kLogEps) / t;
    if (out.mu > threshold) {
        const double q = std::abs(pj) < 1e-14 ? 0.0 : std::pow(f_tar, -1.0 / pj) * std::sqrt(out.mu);
        phibar = std::pow(q + sq_j, 2);
        if (phibar < threshold) {
            const double w = std::sqrt(kLogEps / (kLogEps - log_tol));
            const double u = std::sqrt(-phibar * t / kLogEps);
            out.mu = threshold;
            out.n = std::ceil(w * log_tol / 2.0 / kPi / (u * w - 1.0));
            out.h = std::sqrt(kLogEps / (kLogEps - log_tol)) / out.n;
        } else {
            out.n = kInf;
            out.h = 0.0;
        }
    }
    return out;
}

cplx laplace_fn(cplx s, double a, double b, double g, cplx z) {
    return std::pow(s, a * g - b) / std::pow(std::pow(s, a) - z, g);
}

// Residue of e^s s^{ag-b} (s^a - z)^{-g} at a pole s* of order g (g integer).
cplx residue(cplx sp, double a, double b, double g, cplx z, const std::vector<cplx>& others) {
    if (g == 1.0) return std::pow(sp, 1.0 - b) * std::exp(sp) / a;
    // Higher order: trapezoid rule on a small circle around the pole.
    double rad = 0.5 * std::abs(sp);
    for (const cplx& o : others)
        if (o != sp) rad = std::min(rad, 0.5 * std::abs(o - sp));
    if (sp.real() < 0.0) rad = std::min(rad, 0.5 * std::abs(sp.imag()));
    const int m = 128;
    cplx acc = 0.0;
    for (int k = 0; k < m; ++k) {
        const cplx e = std::polar(1.0, 2.0 * kPi * (k + 0.5) / m);
        const cplx s = sp + rad * e;
        acc += std::exp(s) * laplace_fn(s, a, b, g, z) * rad * e;
    }
    return acc / double(m);
}

}  // namespace

cplx ml_contour(double a, double b, double g, cplx z) {
    const double t = 1.0;
    double log_tol = std::log(1e-15);

    const double theta = std::arg(z);
    const int kmin = static_cast<int>(std::ceil(-a / 2.0 - theta / (2.0 * kPi)));
    const int kmax = static_cast<int>(std::floor(a / 2.0 - theta / (2.0 * kPi)));
    struct Pole {
        cplx s;
        double phi;
    };
    std::vector<Pole> poles;
    for (int k = kmin; k <= kmax; ++k) {
        const cplx s = std::pow(std::abs(z), 1.0 / a) * std::polar(1.0, (theta + 2.0 * kPi * k) / a);
        const double phi = (s.real() + std::abs(s)) / 2.0;
        if (phi > 1e-15) poles.push_back({s, phi});
    }
    std::sort(poles.begin(), poles.end(), [](const Pole& x, const Pole& y) { return x.phi < y.phi; });
    if (!poles.empty() && g != std::round(g))
        throw RangeError("Mittag-Leffler: non-integer gamma=" + std::to_string(g) +
                         " with branch points in the principal sheet is unsupported");

    // Singularities: origin then poles, sorted by phi.
    std::vector<cplx> sing{0.0};
    std::vector<double> phi{0.0};
    for (const Pole& p : poles) {
        sing.push_back(p.s);
        phi.push_back(p.phi);
    }
    const std::size_t j1 = sing.size();
    std::vector<double> pstr(j1), qstr(j1);
    pstr[0] = std::max(0.0, -2.0 * (a * g - b + 1.0));
    for (std::size_t j = 1; j < j1; ++j) pstr[j] = g;
    for (std::size_t j = 0; j + 1 < j1; ++j) qstr[j] = g;
    qstr[j1 - 1] = kInf;
    phi.push_back(kInf);

    ContourParams best;
    std::size_t best_region = 0;
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<std::size_t> admissible;
        for (std::size_t j = 0; j < j1; ++j)
            if (phi[j] < (log_tol - kLogEps) / t && phi[j] < phi[j + 1]) admissible.push_back(j);
        best = ContourParams{};
        for (std::size_t j : admissible) {
            const ContourParams cp = j + 1 < j1 ? optimal_bounded(t, phi[j], phi[j + 1], pstr[j], qstr[j], log_tol)
                                                : optimal_unbounded(t, phi[j], pstr[j], log_tol);
            if (cp.n < best.n) {
                best = cp;
                best_region = j;
            }
        }
        if (best.n <= 200) break;
        log_tol += std::log(10.0);
    }
    if (!std::isfinite(best.n) || best.n <= 0)
        throw RangeError("Mittag-Leffler contour: no admissible integration region at |z|=" +
                         std::to_string(std::abs(z)));

    const int n = static_cast<int>(best.n);
    cplx integral = 0.0;
    for (int k = -n; k <= n; ++k) {
        const double u = best.h * k;
        const cplx s = best.mu * std::pow(cplx(1.0, u), 2);
        const cplx ds = cplx(-2.0 * best.mu * u, 2.0 * best.mu);
        integral += std::exp(s * t) * laplace_fn(s, a, b, g, z) * ds;
    }
    integral *= best.h / (2.0 * kPi * cplx(0.0, 1.0));

    cplx res = 0.0;
    for (std::size_t j = best_region + 1; j < j1; ++j) res += residue(sing[j], a, b, g, z, sing);

    cplx out = integral + res;
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw RangeError("Mittag-Leffler contour: overflow at |z|=" + std::to_string(std::abs(z)));
    if (z.imag() == 0.0) out.imag(0.0);
    return out;
}

}  // namespace sigmaevo::detail
