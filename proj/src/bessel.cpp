#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/kernels.hpp"

namespace sigmaevo {

double bessel_j(double nu, double x) {
    if (!(nu > -1.0)) throw DomainError("bessel_j: order must exceed -1, got " + std::to_string(nu));
    if (!(x >= 0.0)) throw DomainError("bessel_j: argument must be non-negative");
    if (nu == 0.5 || nu == -0.5) {
        if (x == 0.0) return nu > 0.0 ? 0.0 : INFINITY;
        const double c = std::sqrt(2.0 / (std::numbers::pi * x));
        return nu > 0.0 ? c * std::sin(x) : c * std::cos(x);
    }
    if (x == 0.0) return nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : INFINITY);
    return boost::math::cyl_bessel_j(nu, x);
}

namespace {

double zero_newton(double nu, int k) {
    const double pi = std::numbers::pi;
    // McMahon's expansion as the starting point.
    const double b = (k + 0.5 * nu - 0.25) * pi;
    const double m = 4.0 * nu * nu;
    double x = b - (m - 1.0) / (8.0 * b) - 4.0 * (m - 1.0) * (7.0 * m - 31.0) / (3.0 * std::pow(8.0 * b, 3));
    for (int it = 0; it < 50; ++it) {
        const double j = bessel_j(nu, x);
        const double dj = 0.5 * (boost::math::cyl_bessel_j(nu - 1.0, x) - boost::math::cyl_bessel_j(nu + 1.0, x));
        const double dx = j / dj;
        x -= dx;
        if (std::abs(dx) < 1e-15 * x) break;
    }
    return x;
}

struct ZeroTable {
    std::vector<double> z;
};

}  // namespace

double bessel_zero(double nu, int k) {
    if (k < 1) throw DomainError("bessel_zero: index starts at 1");
    const double pi = std::numbers::pi;
    if (nu == -0.5) return (k - 0.5) * pi;
    if (nu == 0.5) return k * pi;
    static std::mutex mtx;
    static std::map<double, std::shared_ptr<const ZeroTable>> tables;
    std::shared_ptr<const ZeroTable> tab;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = tables.find(nu); it != tables.end()) tab = it->second;
    }
    if (!tab || static_cast<int>(tab->z.size()) < k) {
        const int size = std::max(k, tab ? 2 * static_cast<int>(tab->z.size()) : 1024);
        auto fresh = std::make_shared<ZeroTable>();
        fresh->z.resize(size);
        for (int i = 0; i < size; ++i) fresh->z[i] = zero_newton(nu, i + 1);
        std::lock_guard<std::mutex> lock(mtx);
        auto& slot = tables[nu];
        if (!slot || slot->z.size() < fresh->z.size()) slot = fresh;
        tab = slot;
    }
    return tab->z[k - 1];
}

}  // namespace sigmaevo
