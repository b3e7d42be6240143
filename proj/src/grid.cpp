#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <string>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/solver.hpp"

namespace sigmaevo {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;  // the FFTW planner is not thread-safe
    return m;
}

// In-place unnormalized n-d DFT with exp(sign * i ...) kernel.
void dft(const Grid& g, std::vector<cplx>& data, int sign) {
    const std::size_t total = data.size();
    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
    if (!buf) throw std::bad_alloc();
    int dims[3] = {g.points, g.points, g.points};
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft(g.n, dims, buf, buf, sign, FFTW_ESTIMATE);
    }
    std::memcpy(buf, data.data(), sizeof(fftw_complex) * total);
    fftw_execute(plan);
    std::memcpy(static_cast<void*>(data.data()), buf, sizeof(fftw_complex) * total);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(buf);
}

// exp(-i k . x0) with x0 = (-L/2, ...): (-1)^{sum of wave indices}.
double origin_phase(const Grid& g, std::size_t flat) {
    long s = 0;
    for (int d = 0; d < g.n; ++d) {
        s += g.wave_index(static_cast<int>(flat % g.points));
        flat /= g.points;
    }
    return (s % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

void Grid::validate() const {
    if (n < 1 || n > 3) throw ConfigError("grid dimension must be 1, 2 or 3");
    if (points < 2 || (points & (points - 1)) != 0)
        throw ConfigError("grid points per axis must be a power of two >= 2, got " + std::to_string(points));
    if (!(length > 0.0) || !std::isfinite(length)) throw ConfigError("grid length must be positive");
}

std::size_t Grid::size() const {
    std::size_t s = 1;
    for (int d = 0; d < n; ++d) s *= static_cast<std::size_t>(points);
    return s;
}

long Grid::key(std::size_t flat) const {
    long k = 0;
    for (int d = 0; d < n; ++d) {
        const long m = wave_index(static_cast<int>(flat % points));
        k += m * m;
        flat /= points;
    }
    return k;
}

double Grid::xi_abs(std::size_t flat) const {
    return 2.0 * std::numbers::pi / length * std::sqrt(static_cast<double>(key(flat)));
}

Point SpectralField::point(std::size_t flat) const {
    Point x{0.0, 0.0, 0.0};
    for (int d = grid_.n - 1; d >= 0; --d) {
        x[d] = grid_.coord(static_cast<int>(flat % grid_.points));
        flat /= grid_.points;
    }
    return x;
}

SpectralField SpectralField::from_physical(const Grid& g, std::vector<cplx> values) {
    g.validate();
    if (values.size() != g.size())
        throw LengthError("field has " + std::to_string(values.size()) + " samples, grid needs " +
                          std::to_string(g.size()));
    SpectralField f;
    f.grid_ = g;
    f.phys_ = std::move(values);
    f.spec_ = f.phys_;
    dft(g, f.spec_, FFTW_FORWARD);
    const double inv = 1.0 / static_cast<double>(g.size());
    for (std::size_t i = 0; i < f.spec_.size(); ++i) f.spec_[i] *= inv * origin_phase(g, i);
    return f;
}

SpectralField SpectralField::from_spectral(const Grid& g, std::vector<cplx> coeffs) {
    g.validate();
    if (coeffs.size() != g.size())
        throw LengthError("spectral data has " + std::to_string(coeffs.size()) + " entries, grid needs " +
                          std::to_string(g.size()));
    SpectralField f;
    f.grid_ = g;
    f.spec_ = std::move(coeffs);
    f.phys_.resize(f.spec_.size());
    for (std::size_t i = 0; i < f.spec_.size(); ++i) f.phys_[i] = f.spec_[i] * origin_phase(g, i);
    dft(g, f.phys_, FFTW_BACKWARD);
    return f;
}

SpectralField SpectralField::from_function(const Grid& g, const std::function<cplx(const Point&)>& fn) {
    g.validate();
    SpectralField probe;
    probe.grid_ = g;
    std::vector<cplx> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(probe.point(i));
    return from_physical(g, std::move(v));
}

}  // namespace sigmaevo
