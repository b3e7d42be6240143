#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/fracops.hpp"
#include "sigmaevo/gamma.hpp"
#include "sigmaevo/ml.hpp"
#include "sigmaevo/parallel.hpp"
#include "sigmaevo/solver.hpp"

namespace sigmaevo {

namespace {

// Distinct |xi| shells of a grid; symbols depend on |xi| only.
struct Shells {
    std::vector<long> keys;
    std::vector<int> of_mode;  // shell index per flat mode
    std::vector<double> xi;    // |xi| per shell
};

Shells shells(const Grid& g) {
    Shells s;
    std::map<long, int> index;
    s.of_mode.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const long k = g.key(i);
        auto [it, fresh] = index.emplace(k, static_cast<int>(index.size()));
        if (fresh) s.keys.push_back(k);
        s.of_mode[i] = it->second;
    }
    s.xi.resize(s.keys.size());
    const double c = 2.0 * 3.141592653589793 / g.length;
    for (std::size_t j = 0; j < s.keys.size(); ++j) s.xi[j] = c * std::sqrt(static_cast<double>(s.keys[j]));
    return s;
}

bool same_grid(const Grid& a, const Grid& b) { return a.n == b.n && a.points == b.points && a.length == b.length; }

void check_times(const std::vector<double>& times, bool need_uniform) {
    if (times.empty()) throw ConfigError("solver: no output times");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || !std::isfinite(times[i])) throw ConfigError("solver: times must be finite and >= 0");
        if (i && !(times[i] > times[i - 1])) throw ConfigError("solver: times must be strictly increasing");
    }
    if (!need_uniform) return;
    if (times[0] != 0.0 || times.size() < 2) throw ConfigError("solver: a source needs uniform times starting at 0");
    const double dt = times[1] - times[0];
    for (std::size_t i = 1; i < times.size(); ++i)
        if (std::abs(times[i] - i * dt) > 1e-9 * dt * static_cast<double>(i))
            throw ConfigError("solver: a source needs uniform times (non-uniform step at index " + std::to_string(i) + ")");
}

void check_source(const Source& f, const Grid& g, std::size_t n_times) {
    if (f.zero()) return;
    if (f.samples.size() != n_times)
        throw LengthError("source has " + std::to_string(f.samples.size()) + " samples for " + std::to_string(n_times) +
                          " output times");
    for (const auto& s : f.samples)
        if (!same_grid(s.grid(), g)) throw ConfigError("source grid differs from the data grid");
}

// Homogeneous part: sum over data of symbol(t, |xi|) * data^.
Trajectory homogeneous(const std::vector<const SpectralField*>& data,
                       const std::vector<std::function<cplx(double, double)>>& symbols, const std::vector<double>& times) {
    const Grid& g = data[0]->grid();
    const Shells sh = shells(g);
    const std::size_t ns = sh.keys.size(), nt = times.size();
    // table[d][ti * ns + shell]
    std::vector<std::vector<cplx>> table(data.size(), std::vector<cplx>(nt * ns));
    parallel_for(ns, [&](std::size_t j) {
        for (std::size_t ti = 0; ti < nt; ++ti)
            for (std::size_t d = 0; d < data.size(); ++d) table[d][ti * ns + j] = symbols[d](times[ti], sh.xi[j]);
    });
    Trajectory tr;
    tr.times = times;
    tr.states.resize(nt);
    parallel_for(nt, [&](std::size_t ti) {
        std::vector<cplx> c(g.size(), 0.0);
        for (std::size_t d = 0; d < data.size(); ++d) {
            const auto& src = data[d]->spectral();
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += table[d][ti * ns + sh.of_mode[i]] * src[i];
        }
        tr.states[ti] = SpectralField::from_spectral(g, std::move(c));
    });
    return tr;
}

// Retarded term Gamma(beta) I^beta[m(t_n - .) f^](t_n), m = M_hat / t^{beta-1}.
void add_retarded(Trajectory& tr, const Source& f, const ModelParams& p) {
    const Grid& g = tr.states[0].grid();
    const Shells sh = shells(g);
    const std::size_t ns = sh.keys.size(), nt = tr.times.size();
    const double dt = tr.times[1] - tr.times[0];
    std::vector<cplx> m(nt * ns);  // m[k * ns + shell] at t = k dt
    parallel_for(ns, [&](std::size_t j) {
        for (std::size_t k = 0; k < nt; ++k) m[k * ns + j] = symbol_M_reduced(k * dt, sh.xi[j], p);
    });
    const double gb = gamma_fn(p.beta);
    std::vector<std::vector<cplx>> add(nt, std::vector<cplx>(g.size(), 0.0));
    for (std::size_t n = 1; n < nt; ++n) {
        const std::vector<double> w = rl_weights(p.beta, static_cast<int>(n), dt);
        auto& out = add[n];
        parallel_for(g.size(), [&](std::size_t i) {
            const int s = sh.of_mode[i];
            cplx acc = 0.0;
            for (std::size_t jj = 0; jj <= n; ++jj) acc += w[jj] * m[(n - jj) * ns + s] * f.samples[jj].spectral()[i];
            out[i] = gb * acc;
        });
    }
    for (std::size_t n = 1; n < nt; ++n) {
        std::vector<cplx> c = tr.states[n].spectral();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += add[n][i];
        tr.states[n] = SpectralField::from_spectral(g, std::move(c));
    }
}

}  // namespace

SpectralField frac_laplacian(const SpectralField& f, double gamma) {
    if (!(gamma >= 0.0)) throw DomainError("frac_laplacian: gamma must be >= 0");
    if (gamma == 0.0) return f;
    const Grid& g = f.grid();
    std::vector<cplx> c = f.spectral();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= std::pow(g.xi_abs(i), gamma);
    return SpectralField::from_spectral(g, std::move(c));
}

SpectralField apply_ml_multiplier(const SpectralField& f, double t, double alpha, double beta, double sigma,
                                  cplx lambda, double eta) {
    if (!(t >= 0.0)) throw DomainError("apply_ml_multiplier: t must be >= 0");
    const Grid& g = f.grid();
    const Shells sh = shells(g);
    std::vector<cplx> mult(sh.keys.size());
    const double ta = std::pow(t, alpha);
    parallel_for(mult.size(), [&](std::size_t j) {
        const double x = sh.xi[j];
        const double pe = (eta == 0.0) ? 1.0 : std::pow(x, eta);
        mult[j] = pe == 0.0 ? 0.0 : pe * ml_eval({alpha, beta, 1.0}, -lambda * std::pow(x, sigma) * ta);
    });
    std::vector<cplx> c = f.spectral();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= mult[sh.of_mode[i]];
    return SpectralField::from_spectral(g, std::move(c));
}

Source sample_source(const Grid& g, const std::vector<double>& times,
                     const std::function<cplx(double, const Point&)>& f) {
    Source s;
    s.samples.reserve(times.size());
    for (double t : times)
        s.samples.push_back(SpectralField::from_function(g, [&](const Point& x) { return f(t, x); }));
    return s;
}

std::vector<double> uniform_times(double t_end, int n_steps) {
    if (!(t_end > 0.0) || n_steps < 1) throw ConfigError("uniform_times: need t_end > 0 and n_steps >= 1");
    std::vector<double> t(n_steps + 1);
    for (int k = 0; k <= n_steps; ++k) t[k] = t_end * k / n_steps;
    return t;
}

Trajectory solve_cp1(const SpectralField& u0, const Source& f, const ModelParams& p, const std::vector<double>& times) {
    validate(p);
    if (!(p.alpha <= 0.5))
        throw ConfigError("cp1 requires 0 < alpha <= 1/2 (Given 0 < alpha <= 1/2), got alpha=" + std::to_string(p.alpha));
    check_times(times, !f.zero());
    check_source(f, u0.grid(), times.size());
    Trajectory tr = homogeneous({&u0}, {[&](double t, double xi) { return symbol_N_hat(t, xi, p); }}, times);
    if (!f.zero()) add_retarded(tr, f, p);
    tr.params = p;
    tr.problem = "cp1";
    return tr;
}

Trajectory solve_cp2(const SpectralField& u0, const SpectralField& u1, const Source& f, const ModelParams& p,
                     const std::vector<double>& times) {
    validate(p);
    if (!(p.alpha > 0.5))
        throw ConfigError("cp2 requires 1/2 < alpha <= 1 (Given 1/2 < alpha <= 1), got alpha=" + std::to_string(p.alpha));
    if (!same_grid(u0.grid(), u1.grid())) throw ConfigError("u0 and u1 live on different grids");
    check_times(times, !f.zero());
    check_source(f, u0.grid(), times.size());
    Trajectory tr = homogeneous({&u0, &u1},
                                {[&](double t, double xi) { return symbol_N_hat(t, xi, p); },
                                 [&](double t, double xi) { return symbol_J_hat(t, xi, p); }},
                                times);
    if (!f.zero()) add_retarded(tr, f, p);
    tr.params = p;
    tr.problem = "cp2";
    tr.velocity = u1;
    return tr;
}

double residual_cp(const Trajectory& traj, const Source& f, const ResidualOptions& opt) {
    const std::size_t nt = traj.times.size();
    if (nt < 17) throw LengthError("residual_cp: need at least 16 time steps");
    check_times(traj.times, true);
    const Grid& g = traj.states[0].grid();
    check_source(f, g, nt);
    const ModelParams& p = traj.params;
    const double dt = traj.times[1];
    const TimeGrid tg{0.0, dt, static_cast<int>(nt - 1)};
    const std::size_t first = static_cast<std::size_t>(std::ceil(opt.window_start * (nt - 1) - 1e-9));

    const bool cp2 = traj.problem == "cp2";
    if (cp2 && traj.velocity.spectral().size() != g.size()) throw ConfigError("residual_cp: cp2 trajectory without u1");
    double m0 = 0.0, m1 = 0.0, mf = 0.0;
    for (const cplx& c : traj.states[0].spectral()) m0 = std::max(m0, std::abs(c));
    if (cp2)
        for (const cplx& c : traj.velocity.spectral()) m1 = std::max(m1, std::abs(c));
    if (!f.zero())
        for (const auto& s : f.samples)
            for (const cplx& c : s.spectral()) mf = std::max(mf, std::abs(c));
    const double scale = m0 + m1 + mf;
    if (scale == 0.0) return 0.0;

    std::vector<double> worst(g.size(), 0.0);
    parallel_for(g.size(), [&](std::size_t i) {
        TimeSeries u{tg, std::vector<cplx>(nt)};
        for (std::size_t k = 0; k < nt; ++k) u.values[k] = traj.states[k].spectral()[i];
        const double v = std::pow(g.xi_abs(i), p.sigma);
        const std::optional<cplx> slope = cp2 ? std::optional<cplx>(traj.velocity.spectral()[i]) : std::nullopt;
        const TimeSeries d2 = caputo_deriv(u, 2.0 * p.alpha, slope);
        const TimeSeries d1 = caputo_deriv(u, p.alpha);
        std::vector<cplx> rhs(nt, 0.0);
        if (!f.zero()) {
            TimeSeries fs{tg, std::vector<cplx>(nt)};
            for (std::size_t k = 0; k < nt; ++k) fs.values[k] = f.samples[k].spectral()[i];
            rhs = rl_integral(fs, p.beta - 2.0 * p.alpha).values;
        }
        double w = 0.0;
        for (std::size_t k = std::max<std::size_t>(first, 1); k < nt; ++k) {
            const cplx r = d2.values[k] + p.mu * v * d1.values[k] + v * v * u.values[k] - rhs[k];
            w = std::max(w, std::abs(r));
        }
        worst[i] = w;
    });
    return *std::max_element(worst.begin(), worst.end()) / scale;
}

}  // namespace sigmaevo
