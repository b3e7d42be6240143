#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "sigmaevo/errors.hpp"
#include "sigmaevo/io.hpp"
#include "sigmaevo/kernels.hpp"
#include "sigmaevo/ml.hpp"
#include "sigmaevo/verify.hpp"

namespace sigmaevo::cli {

namespace {

constexpr double kPi = 3.141592653589793;

void only_keys(const nlohmann::json& j, std::initializer_list<const char*> keys, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known) throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
}

double num(const nlohmann::json& j, const char* key, double def, const std::string& where) {
    if (!j.contains(key)) return def;
    if (!j[key].is_number()) throw ConfigError(where + "." + key + " must be a number");
    return j[key].get<double>();
}

std::vector<double> parse_grid_spec(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw ConfigError("--z-grid expects start:stop:count, got '" + s + "'");
    double a, b;
    long m;
    try {
        a = std::stod(parts[0]), b = std::stod(parts[1]), m = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw ConfigError("--z-grid expects numbers, got '" + s + "'");
    }
    if (m < 1 || m > 10000000) throw ConfigError("--z-grid count must be in 1..1e7");
    std::vector<double> v(m);
    for (long i = 0; i < m; ++i) v[i] = m == 1 ? a : a + (b - a) * i / (m - 1);
    return v;
}

// Reads a sample file: CSV with a header; uses the "re" (and "im") columns, or
// "value". Row order must match the grid's row-major flat index.
std::vector<cplx> read_samples(const std::string& path, const Grid& g) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read sample file '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("sample file '" + path + "' is empty");
    std::vector<std::string> cols;
    {
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    }
    int ire = -1, iim = -1;
    for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
        if (cols[i] == "re" || cols[i] == "value") ire = i;
        if (cols[i] == "im") iim = i;
    }
    if (ire < 0) throw ConfigError("sample file '" + path + "' needs a 're' or 'value' column");
    std::vector<cplx> v;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> x;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) {
            try {
                x.push_back(std::stod(c));
            } catch (const std::exception&) {
                throw ConfigError("non-numeric entry '" + c + "' in '" + path + "'");
            }
        }
        if (static_cast<int>(x.size()) != static_cast<int>(cols.size()))
            throw ConfigError("ragged row in '" + path + "'");
        v.emplace_back(x[ire], iim >= 0 ? x[iim] : 0.0);
    }
    if (v.size() != g.size())
        throw ConfigError("sample file '" + path + "' has " + std::to_string(v.size()) + " rows, grid needs " +
                          std::to_string(g.size()));
    return v;
}

std::vector<double> center_of(const nlohmann::json& j, const std::string& where) {
    std::vector<double> c(3, 0.0);
    if (!j.contains("center")) return c;
    if (!j["center"].is_array() || j["center"].size() > 3) throw ConfigError(where + ".center must be a list of up to 3 numbers");
    for (std::size_t i = 0; i < j["center"].size(); ++i) {
        if (!j["center"][i].is_number()) throw ConfigError(where + ".center must hold numbers");
        c[i] = j["center"][i].get<double>();
    }
    return c;
}

// Fills in defaults so the normalized config is explicit.
nlohmann::json normalize_profile(const nlohmann::json& j, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "zero") return "zero";
    if (!j.is_object()) throw ConfigError(where + " must be \"zero\" or an object");
    if (j.contains("file")) {
        only_keys(j, {"file"}, where);
        if (!j["file"].is_string()) throw ConfigError(where + ".file must be a path");
        return j;
    }
    if (!j.contains("profile") || !j["profile"].is_string()) throw ConfigError(where + " needs a \"profile\" or \"file\"");
    const std::string prof = j["profile"];
    nlohmann::json out = {{"profile", prof}, {"amplitude", num(j, "amplitude", 1.0, where)}};
    if (prof == "gaussian") {
        only_keys(j, {"profile", "amplitude", "width", "center"}, where);
        out["width"] = num(j, "width", 1.0, where);
        if (!(out["width"].get<double>() > 0.0)) throw ConfigError(where + ".width must be positive");
        out["center"] = center_of(j, where);
    } else if (prof == "bump") {
        only_keys(j, {"profile", "amplitude", "radius", "center"}, where);
        out["radius"] = num(j, "radius", 1.0, where);
        if (!(out["radius"].get<double>() > 0.0)) throw ConfigError(where + ".radius must be positive");
        out["center"] = center_of(j, where);
    } else if (prof == "plane-wave") {
        only_keys(j, {"profile", "amplitude", "k", "complex"}, where);
        std::vector<int> k(3, 0);
        if (j.contains("k")) {
            if (!j["k"].is_array() || j["k"].size() > 3) throw ConfigError(where + ".k must be a list of integers");
            for (std::size_t i = 0; i < j["k"].size(); ++i) {
                if (!j["k"][i].is_number_integer()) throw ConfigError(where + ".k must hold integers");
                k[i] = j["k"][i].get<int>();
            }
        } else {
            k[0] = 1;
        }
        out["k"] = k;
        out["complex"] = j.value("complex", false);
    } else if (prof == "random") {
        only_keys(j, {"profile", "amplitude"}, where);
    } else {
        throw ConfigError(where + ": unknown profile '" + prof + "' (gaussian, plane-wave, bump, random, file)");
    }
    return out;
}

SpectralField build_profile(const nlohmann::json& j, const Grid& g, std::uint64_t seed) {
    if (j.is_string()) return SpectralField::from_function(g, [](const Point&) { return cplx(0.0); });
    if (j.contains("file")) return SpectralField::from_physical(g, read_samples(j["file"], g));
    const std::string prof = j["profile"];
    const double A = j["amplitude"];
    if (prof == "gaussian") {
        const double w = j["width"];
        const auto c = j["center"].get<std::vector<double>>();
        return SpectralField::from_function(g, [&](const Point& x) {
            double r2 = 0.0;
            for (int d = 0; d < g.n; ++d) r2 += (x[d] - c[d]) * (x[d] - c[d]);
            return cplx(A * std::exp(-0.5 * r2 / (w * w)));
        });
    }
    if (prof == "bump") {
        const double R = j["radius"];
        const auto c = j["center"].get<std::vector<double>>();
        return SpectralField::from_function(g, [&](const Point& x) {
            double r2 = 0.0;
            for (int d = 0; d < g.n; ++d) r2 += (x[d] - c[d]) * (x[d] - c[d]);
            const double s = r2 / (R * R);
            return cplx(s < 1.0 ? A * std::exp(1.0 - 1.0 / (1.0 - s)) : 0.0);
        });
    }
    if (prof == "plane-wave") {
        const auto k = j["k"].get<std::vector<int>>();
        const bool cx = j["complex"];
        return SpectralField::from_function(g, [&](const Point& x) {
            double ph = 0.0;
            for (int d = 0; d < g.n; ++d) ph += 2.0 * kPi * k[d] * x[d] / g.length;
            return cx ? A * std::exp(cplx(0.0, ph)) : cplx(A * std::cos(ph));
        });
    }
    // random: i.i.d. uniform samples in [-A, A] from the config seed.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-A, A);
    std::vector<cplx> v(g.size());
    for (auto& x : v) x = U(rng);
    return SpectralField::from_physical(g, std::move(v));
}

nlohmann::json normalize_source(const nlohmann::json& j) {
    if (j.is_string() && j.get<std::string>() == "zero") return "zero";
    if (!j.is_object()) throw ConfigError("f must be \"zero\" or an object");
    nlohmann::json space = j;
    nlohmann::json time = {{"kind", "constant"}};
    if (j.contains("time")) {
        const auto& t = j["time"];
        only_keys(t, {"kind", "omega", "tau0", "power"}, "f.time");
        const std::string kind = t.value("kind", "constant");
        if (kind == "constant") {
        } else if (kind == "cos") {
            time["omega"] = num(t, "omega", 1.0, "f.time");
        } else if (kind == "pulse") {
            time["tau0"] = num(t, "tau0", 1.0, "f.time");
            time["power"] = num(t, "power", -1.0, "f.time");
            if (!(time["tau0"].get<double>() > 0.0)) throw ConfigError("f.time.tau0 must be positive");
        } else {
            throw ConfigError("f.time.kind must be constant, cos or pulse");
        }
        time["kind"] = kind;
        space.erase("time");
    }
    nlohmann::json out = normalize_profile(space, "f");
    out["time"] = time;
    return out;
}

double time_factor(const nlohmann::json& t, double tau) {
    const std::string kind = t["kind"];
    if (kind == "cos") return std::cos(t["omega"].get<double>() * tau);
    if (kind == "pulse") return std::pow(1.0 + tau / t["tau0"].get<double>(), t["power"].get<double>());
    return 1.0;
}

void check_finite(const RadialProfile& k) {
    for (double v : k.values)
        if (!std::isfinite(v)) throw NumericalError("kernel evaluation produced non-finite values");
}

}  // namespace

nlohmann::json SolveConfig::normalized() const {
    return {{"schema_version", kSchemaVersion},
            {"problem", problem},
            {"params", to_json(params)},
            {"grid", {{"n", grid.n}, {"points", grid.points}, {"length", grid.length}}},
            {"times", times_spec},
            {"u0", u0},
            {"u1", u1},
            {"f", f},
            {"seed", seed}};
}

SolveConfig parse_solve_config(const nlohmann::json& in, const std::string& problem) {
    // A trajectory manifest carries the normalized config under "config".
    const nlohmann::json& j = in.contains("config") && in.contains("files") ? in["config"] : in;
    only_keys(j, {"schema_version", "problem", "params", "grid", "times", "u0", "u1", "f", "seed"}, "config");
    if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
        throw ConfigError("unsupported schema_version " + j["schema_version"].dump());
    SolveConfig c;
    c.problem = problem;
    if (j.contains("problem") && j["problem"] != problem)
        throw ConfigError("config is for '" + j["problem"].get<std::string>() + "' but '" + problem + "' was requested");
    c.params = model_params_from_json(j.value("params", nlohmann::json::object()));
    validate(c.params);
    if (problem == "cp1" && !(c.params.alpha <= 0.5))
        throw ConfigError("cp1 requires 0 < alpha <= 1/2 (Given 0 < alpha <= 1/2), got alpha=" + std::to_string(c.params.alpha));
    if (problem == "cp2" && !(c.params.alpha > 0.5))
        throw ConfigError("cp2 requires 1/2 < alpha <= 1 (Given 1/2 < alpha <= 1), got alpha=" + std::to_string(c.params.alpha));

    const nlohmann::json gj = j.value("grid", nlohmann::json::object());
    only_keys(gj, {"n", "points", "length"}, "grid");
    c.grid.n = static_cast<int>(num(gj, "n", c.params.n, "grid"));
    c.grid.points = static_cast<int>(num(gj, "points", 256, "grid"));
    c.grid.length = num(gj, "length", 40.0, "grid");
    c.grid.validate();
    if (c.grid.n != c.params.n) throw ConfigError("grid.n must equal params.n");

    if (!j.contains("times")) throw ConfigError("config needs \"times\"");
    const auto& tj = j["times"];
    if (tj.contains("values")) {
        only_keys(tj, {"values"}, "times");
        if (!tj["values"].is_array()) throw ConfigError("times.values must be a list");
        for (const auto& v : tj["values"]) {
            if (!v.is_number()) throw ConfigError("times.values must hold numbers");
            c.times.push_back(v.get<double>());
        }
        c.times_spec = {{"values", c.times}};
    } else {
        only_keys(tj, {"t_end", "steps"}, "times");
        const double t_end = num(tj, "t_end", 1.0, "times");
        const double steps = num(tj, "steps", 16, "times");
        if (steps != std::floor(steps)) throw ConfigError("times.steps must be an integer");
        c.times = uniform_times(t_end, static_cast<int>(steps));
        c.times_spec = {{"t_end", t_end}, {"steps", static_cast<int>(steps)}};
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    if (!j.contains("u0")) throw ConfigError("config needs \"u0\"");
    c.u0 = normalize_profile(j["u0"], "u0");
    c.u1 = normalize_profile(j.value("u1", nlohmann::json("zero")), "u1");
    if (problem == "cp1" && c.u1 != "zero") throw ConfigError("cp1 takes no u1");
    c.f = normalize_source(j.value("f", nlohmann::json("zero")));
    return c;
}

int cmd_ml_eval(const MlEvalArgs& a, std::ostream& out) {
    if (!(a.alpha > 0.0)) throw ConfigError("--alpha must be positive");
    std::vector<cplx> zs;
    if (!a.z_grid.empty()) {
        for (double x : parse_grid_spec(a.z_grid)) zs.emplace_back(x, a.z_im);
    } else {
        zs.emplace_back(a.z_re, a.z_im);
    }
    std::vector<std::vector<double>> rows;
    for (cplx z : zs) {
        const cplx v = a.gamma == 1.0 ? ml_eval({a.alpha, a.beta, 1.0}, z) : ml3_eval({a.alpha, a.beta, a.gamma}, z);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw RangeError("E(z) is not representable at z = " + fmt_num(z.real()) + "+" + fmt_num(z.imag()) + "i");
        rows.push_back({z.real(), z.imag(), v.real(), v.imag()});
    }
    const std::vector<std::string> header = {"z_re", "z_im", "re", "im"};
    if (!a.out.empty()) write_csv(a.out, header, rows);
    out << "z_re,z_im,re,im\n";
    for (const auto& r : rows) out << fmt_num(r[0]) << ',' << fmt_num(r[1]) << ',' << fmt_num(r[2]) << ',' << fmt_num(r[3]) << '\n';
    return kOk;
}

int cmd_kernel(const KernelArgs& a, std::ostream& out) {
    if (!(a.r_min > 0.0) || !(a.r_max > a.r_min) || a.count < 2) throw ConfigError("need 0 < --r-min < --r-max and --count >= 2");
    std::vector<double> radii(a.count);
    for (int i = 0; i < a.count; ++i) radii[i] = a.r_min + (a.r_max - a.r_min) * i / (a.count - 1);
    HankelOptions opt;
    opt.r_max = a.hankel_rmax;
    opt.n_nodes = a.nodes;
    RadialProfile k;
    if (a.kernel == "K") {
        k = kernel_K(a.t, radii, a.eta, a.params.alpha, a.params.beta, a.params.sigma, cplx(a.lambda_re, a.lambda_im),
                     a.params.n, opt);
    } else {
        validate(a.params);
        if (a.kernel == "N") k = kernel_N(a.t, radii, a.params, opt);
        else if (a.kernel == "M") k = kernel_M(a.t, radii, a.params, opt);
        else k = kernel_J(a.t, radii, a.params, opt);
    }
    check_finite(k);
    if (!a.out.empty()) {
        write_profile_csv(k, a.out + ".csv");
        write_profile_meta(k, a.out + ".json");
    }
    out << "r,value,imag,error_est\n";
    for (std::size_t i = 0; i < k.radii.size(); ++i)
        out << fmt_num(k.radii[i]) << ',' << fmt_num(k.values[i]) << ',' << fmt_num(k.imag[i]) << ','
            << fmt_num(k.error_est[i]) << '\n';
    out << "# mass " << fmt_num(radial_mass(k)) << '\n';
    return kOk;
}

int cmd_solve(const std::string& problem, const std::string& config_path, const std::string& out_dir, std::ostream& out) {
    const SolveConfig c = parse_solve_config(read_json(config_path), problem);
    const SpectralField u0 = build_profile(c.u0, c.grid, c.seed);
    Source f;
    if (c.f != "zero") {
        nlohmann::json space = c.f;
        const nlohmann::json time = space["time"];
        space.erase("time");
        const SpectralField psi = build_profile(space, c.grid, c.seed + 1);
        for (double t : c.times) {
            std::vector<cplx> v = psi.physical();
            const double a = time_factor(time, t);
            for (auto& x : v) x *= a;
            f.samples.push_back(SpectralField::from_physical(c.grid, std::move(v)));
        }
    }
    Trajectory tr;
    if (problem == "cp1") {
        tr = solve_cp1(u0, f, c.params, c.times);
    } else {
        const SpectralField u1 = build_profile(c.u1, c.grid, c.seed + 2);
        tr = solve_cp2(u0, u1, f, c.params, c.times);
    }
    write_trajectory(tr, out_dir);
    nlohmann::json man = read_json(out_dir + "/manifest.json");
    man["config"] = c.normalized();
    write_json(out_dir + "/manifest.json", man);
    write_norm_table(out_dir + "/norm_linf.csv", tr.times, norm_series(tr, INFINITY));
    write_norm_table(out_dir + "/norm_l2.csv", tr.times, norm_series(tr, 2.0));
    out << "wrote " << tr.states.size() << " states to " << out_dir << '\n';
    return kOk;
}

int cmd_verify(const std::string& suite, const std::string& out_dir, std::ostream& out) {
    VerifyOptions opt;
    opt.out_dir = out_dir;
    const auto reports = run_suite(suite, opt);
    bool ok = true;
    for (const auto& r : reports) {
        out << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.claim << ": " << r.detail << '\n';
        ok = ok && r.pass;
    }
    if (!out_dir.empty()) write_reports(reports, out_dir + "/report.json", out_dir + "/report.csv");
    return ok ? kOk : kCheckFailed;
}

}  // namespace sigmaevo::cli
