#include "sigmaevo/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sigmaevo/errors.hpp"

namespace sigmaevo {

std::string fmt_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_text(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw ConfigError("write to '" + path + "' failed");
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << fmt_num(r[i]);
        os << '\n';
    }
    write_text(path, os.str());
}

void write_json(const std::string& path, const nlohmann::json& j) { write_text(path, j.dump(2) + "\n"); }

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
}

nlohmann::json to_json(const ModelParams& p) {
    return {{"alpha", p.alpha}, {"beta", p.beta}, {"sigma", p.sigma}, {"mu", p.mu}, {"n", p.n}};
}

ModelParams model_params_from_json(const nlohmann::json& j, const ModelParams& defaults) {
    ModelParams p = defaults;
    if (!j.is_object()) throw ConfigError("model parameters must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k != "alpha" && k != "beta" && k != "sigma" && k != "mu" && k != "n")
            throw ConfigError("unknown model parameter '" + k + "'");
        if (!it->is_number()) throw ConfigError("model parameter '" + k + "' must be a number");
    }
    p.alpha = j.value("alpha", p.alpha);
    p.beta = j.value("beta", p.beta);
    p.sigma = j.value("sigma", p.sigma);
    p.mu = j.value("mu", p.mu);
    if (j.contains("n")) {
        const double n = j["n"].get<double>();
        if (n != static_cast<int>(n)) throw ConfigError("dimension n must be an integer");
        p.n = static_cast<int>(n);
    }
    return p;
}

}  // namespace sigmaevo
