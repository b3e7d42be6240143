#include <cmath>
#include <cstdio>
#include <string>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/io.hpp"
#include "sigmaevo/parallel.hpp"
#include "sigmaevo/solver.hpp"

namespace sigmaevo {

double lq_norm(const SpectralField& f, double q) {
    if (!(q >= 1.0)) throw DomainError("lq_norm: q must be >= 1");
    const auto& u = f.physical();
    if (std::isinf(q)) {
        double m = 0.0;
        for (const cplx& v : u) m = std::max(m, std::abs(v));
        return m;
    }
    const double cell = std::pow(f.grid().dx(), f.grid().n);
    double s = 0.0;
    for (const cplx& v : u) s += std::pow(std::abs(v), q);
    return std::pow(s * cell, 1.0 / q);
}

double sobolev_seminorm(const SpectralField& f, double gamma, double q) { return lq_norm(frac_laplacian(f, gamma), q); }

double mixed_norm(const std::vector<double>& times, const std::vector<double>& norms, double s) {
    if (!(s >= 1.0)) throw DomainError("mixed_norm: s must be >= 1");
    if (times.size() != norms.size() || times.empty()) throw LengthError("mixed_norm: times and norms differ in length");
    if (std::isinf(s)) {
        double m = 0.0;
        for (double v : norms) m = std::max(m, v);
        return m;
    }
    double acc = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i)
        acc += 0.5 * (std::pow(norms[i - 1], s) + std::pow(norms[i], s)) * (times[i] - times[i - 1]);
    return std::pow(acc, 1.0 / s);
}

std::vector<double> norm_series(const Trajectory& traj, double q) {
    std::vector<double> out(traj.states.size());
    parallel_for(out.size(), [&](std::size_t i) { out[i] = lq_norm(traj.states[i], q); });
    return out;
}

double mixed_norm(const Trajectory& traj, double s, double q) { return mixed_norm(traj.times, norm_series(traj, q), s); }

void write_trajectory(const Trajectory& traj, const std::string& dir) {
    if (traj.states.empty()) throw LengthError("write_trajectory: empty trajectory");
    const Grid& g = traj.states[0].grid();
    const char* axes[3] = {"x", "y", "z"};
    std::vector<std::string> header;
    for (int d = 0; d < g.n; ++d) header.push_back(axes[d]);
    header.push_back("re");
    header.push_back("im");
    nlohmann::json files = nlohmann::json::array();
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "state_%05zu.csv", k);
        const auto& s = traj.states[k];
        std::vector<std::vector<double>> rows(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            const Point x = s.point(i);
            auto& r = rows[i];
            for (int d = 0; d < g.n; ++d) r.push_back(x[d]);
            r.push_back(s.physical()[i].real());
            r.push_back(s.physical()[i].imag());
        }
        write_csv(dir + "/" + name, header, rows);
        files.push_back(name);
    }
    nlohmann::json man;
    man["schema_version"] = kSchemaVersion;
    man["problem"] = traj.problem;
    man["params"] = to_json(traj.params);
    man["grid"] = {{"n", g.n}, {"points", g.points}, {"length", g.length}};
    man["times"] = traj.times;
    man["files"] = files;
    write_json(dir + "/manifest.json", man);
}

void write_norm_table(const std::string& path, const std::vector<double>& times, const std::vector<double>& values) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < times.size(); ++i) rows.push_back({times[i], values[i]});
    write_csv(path, {"t", "value"}, rows);
}

}  // namespace sigmaevo
