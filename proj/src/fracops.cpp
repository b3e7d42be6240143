#include "sigmaevo/fracops.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/gamma.hpp"

namespace sigmaevo {

namespace {

using cplx = std::complex<double>;
using Table = std::shared_ptr<const std::vector<double>>;

// Immutable weight tables keyed by (order, length). Two threads racing on the
// same key build identical tables; the first insert wins.
class WeightCache {
public:
    template <class Build>
    Table get(int kind, double gamma, int n, Build build) {
        const Key key{kind, gamma, n};
        {
            std::lock_guard<std::mutex> lock(mtx_);
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        Table t = std::make_shared<const std::vector<double>>(build());
        std::lock_guard<std::mutex> lock(mtx_);
        return map_.emplace(key, std::move(t)).first->second;
    }

private:
    using Key = std::tuple<int, double, int>;
    std::mutex mtx_;
    std::map<Key, Table> map_;
};

WeightCache& cache() {
    static WeightCache c;
    return c;
}

// (m+1)^{g+1} + (m-1)^{g+1} - 2 m^{g+1}, m = 0..n (entry 0 unused).
Table rl_interior(double g, int n) {
    return cache().get(0, g, n, [&] {
        std::vector<double> c(n + 1, 0.0);
        const double e = g + 1.0;
        for (int m = 1; m <= n; ++m) c[m] = std::pow(m + 1.0, e) + std::pow(m - 1.0, e) - 2.0 * std::pow(double(m), e);
        return c;
    });
}

// (k+1)^{p} - k^{p}, k = 0..n.
Table power_increments(double p, int n) {
    return cache().get(1, p, n, [&] {
        std::vector<double> b(n + 1);
        for (int k = 0; k <= n; ++k) b[k] = std::pow(k + 1.0, p) - std::pow(double(k), p);
        return b;
    });
}

void check_series(const TimeSeries& f) {
    if (f.grid.n_steps < 1 || !(f.grid.dt > 0.0)) throw DomainError("time grid needs n_steps >= 1 and dt > 0");
    if (f.values.size() != static_cast<std::size_t>(f.grid.n_steps + 1))
        throw LengthError("time series length " + std::to_string(f.values.size()) + " does not match grid (" +
                          std::to_string(f.grid.n_steps + 1) + " nodes)");
}

}  // namespace

TimeSeries TimeSeries::sample(const TimeGrid& g, const std::function<cplx(double)>& f) {
    TimeSeries s{g, {}};
    s.values.resize(g.n_steps + 1);
    for (int k = 0; k <= g.n_steps; ++k) s.values[k] = f(g.t(k));
    return s;
}

double memory_kernel(double nu, double t) {
    if (!(nu > 0.0 && nu < 1.0)) throw DomainError("memory kernel: nu must lie in (0,1)");
    if (!(t > 0.0)) throw DomainError("memory kernel: singular at t <= 0");
    return std::pow(t, nu - 1.0) / gamma_fn(nu);
}

std::vector<double> rl_weights(double g, int n, double dt) {
    if (!(g > 0.0)) throw DomainError("rl_weights: order must be positive");
    std::vector<double> w(n + 1, 0.0);
    if (n == 0) return w;
    const Table c = rl_interior(g, n);
    const double scale = std::pow(dt, g) * rgamma(g + 2.0);
    w[0] = (std::pow(n - 1.0, g + 1.0) - (n - g - 1.0) * std::pow(double(n), g)) * scale;
    for (int j = 1; j < n; ++j) w[j] = (*c)[n - j] * scale;
    w[n] = scale;
    return w;
}

TimeSeries rl_integral(const TimeSeries& f, double gamma) {
    check_series(f);
    if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("rl_integral: gamma must lie in [0,1)");
    if (gamma == 0.0) return f;
    const int n_steps = f.grid.n_steps;
    const double dt = f.grid.dt;
    const Table c = rl_interior(gamma, n_steps);
    const double scale = std::pow(dt, gamma) * rgamma(gamma + 2.0);
    TimeSeries out{f.grid, std::vector<cplx>(n_steps + 1, 0.0)};
    for (int n = 1; n <= n_steps; ++n) {
        cplx acc = (std::pow(n - 1.0, gamma + 1.0) - (n - gamma - 1.0) * std::pow(double(n), gamma)) * f.values[0];
        for (int j = 1; j < n; ++j) acc += (*c)[n - j] * f.values[j];
        acc += f.values[n];
        out.values[n] = acc * scale;
    }
    return out;
}

double caputo_order(double gamma) {
    if (gamma < 1.0) return 2.0 - gamma;
    if (gamma == 1.0 || gamma == 2.0) return 2.0;
    return 3.0 - gamma;
}

TimeSeries caputo_deriv(const TimeSeries& f, double gamma, std::optional<cplx> slope0) {
    check_series(f);
    if (!(gamma > 0.0 && gamma <= 2.0)) throw DomainError("caputo_deriv: gamma must lie in (0,2]");
    const int N = f.grid.n_steps;
    const double dt = f.grid.dt;
    const auto& u = f.values;
    TimeSeries out{f.grid, std::vector<cplx>(N + 1, 0.0)};
    auto& d = out.values;

    if (gamma < 1.0) {
        const Table b = power_increments(1.0 - gamma, N);
        const double scale = std::pow(dt, -gamma) * rgamma(2.0 - gamma);
        for (int n = 1; n <= N; ++n) {
            cplx acc = 0.0;
            for (int j = 0; j < n; ++j) acc += (*b)[n - j - 1] * (u[j + 1] - u[j]);
            d[n] = acc * scale;
        }
        return out;
    }
    if (N < 2) throw LengthError("caputo_deriv: order >= 1 needs at least 3 nodes");
    if (gamma == 1.0) {
        d[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dt);
        for (int k = 1; k < N; ++k) d[k] = (u[k + 1] - u[k - 1]) / (2.0 * dt);
        d[N] = (3.0 * u[N] - 4.0 * u[N - 1] + u[N - 2]) / (2.0 * dt);
        return out;
    }
    const double h2 = dt * dt;
    auto dd = [&](int j) { return (u[j + 1] - 2.0 * u[j] + u[j - 1]) / h2; };
    if (gamma == 2.0) {
        for (int k = 1; k < N; ++k) d[k] = dd(k);
        if (N >= 3) {
            d[0] = (2.0 * u[0] - 5.0 * u[1] + 4.0 * u[2] - u[3]) / h2;
            d[N] = (2.0 * u[N] - 5.0 * u[N - 1] + 4.0 * u[N - 2] - u[N - 3]) / h2;
        } else {
            d[0] = d[N] = dd(1);
        }
        return out;
    }
    // w_0 = f'(0), w_k = (f_k - f_{k-1})/dt ~ f'(t_{k-1/2}); L1 of order gamma-1 on w.
    std::vector<cplx> w(N + 1);
    w[0] = slope0 ? *slope0 : (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dt);
    for (int k = 1; k <= N; ++k) w[k] = (u[k] - u[k - 1]) / dt;
    const Table b = power_increments(2.0 - gamma, N);
    const double scale = std::pow(dt, 1.0 - gamma) * rgamma(3.0 - gamma);
    // h[n] approximates the derivative at t_{n-1/2}; interpolate back to the nodes.
    std::vector<cplx> h(N + 1);
    for (int n = 1; n <= N; ++n) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) acc += (*b)[n - j - 1] * (w[j + 1] - w[j]);
        h[n] = acc * scale;
    }
    for (int n = 1; n < N; ++n) d[n] = 0.5 * (h[n] + h[n + 1]);
    d[N] = 1.5 * h[N] - 0.5 * h[N - 1];
    return out;
}

}  // namespace sigmaevo
