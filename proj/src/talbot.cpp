#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/spectral.hpp"

namespace sigmaevo {

TalbotOptions talbot_options_for(const std::vector<cplx>& singularities, double t, int n_nodes) {
    TalbotOptions opt;
    opt.n_nodes = n_nodes;
    const double r = n_nodes / (5.0 * t);
    double max_re = -INFINITY, max_im = 0.0;
    for (const cplx& s : singularities) {
        // Residues below e^{-46} relative to unit data are left outside the contour.
        if (s.real() * t < -46.0) continue;
        max_re = std::max(max_re, s.real());
        max_im = std::max(max_im, std::abs(s.imag()));
    }
    if (max_re > -INFINITY && max_re >= 0.0) opt.shift = max_re + 1.0 / t;
    // Singularities stay where theta <= pi/2, so the contour passes right of them.
    opt.nu = std::max(1.0, max_im / (0.5 * std::numbers::pi * r));
    return opt;
}

cplx talbot_invert(const std::function<cplx(cplx)>& F, double t, const TalbotOptions& opt) {
    if (!(t > 0.0)) throw DomainError("talbot_invert: t must be positive");
    if (opt.n_nodes < 4) throw DomainError("talbot_invert: need at least 4 nodes");
    const int m = opt.n_nodes / 2;
    const double r = opt.n_nodes / (5.0 * t);
    const double pi = std::numbers::pi;
    cplx acc = 0.0;
    for (int k = -(m - 1); k <= m - 1; ++k) {
        const double th = k * pi / m;
        cplx s, ds;
        if (k == 0) {
            s = opt.shift + r;
            ds = cplx(0.0, r * opt.nu);
        } else {
            const double c = std::cos(th) / std::sin(th);
            const double sn = std::sin(th);
            s = cplx(opt.shift + r * th * c, r * opt.nu * th);
            ds = cplx(r * (c - th / (sn * sn)), r * opt.nu);
        }
        const cplx term = std::exp(s * t) * F(s) * ds;
        if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
            throw NumericalError("talbot_invert: non-finite integrand at s=(" + std::to_string(s.real()) + "," +
                                 std::to_string(s.imag()) + ")");
        acc += term;
    }
    return acc / cplx(0.0, 2.0 * m);
}

cplx talbot_invert(const std::function<cplx(cplx)>& F, double t, int n_nodes) {
    TalbotOptions opt;
    opt.n_nodes = n_nodes;
    return talbot_invert(F, t, opt);
}

}  // namespace sigmaevo
