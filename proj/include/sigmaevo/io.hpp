#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sigmaevo/spectral.hpp"

namespace sigmaevo {

inline constexpr int kSchemaVersion = 1;

// Full round-trip precision (17 significant digits).
std::string fmt_num(double x);

void write_text(const std::string& path, const std::string& content);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
void write_json(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json(const std::string& path);

nlohmann::json to_json(const ModelParams& p);
ModelParams model_params_from_json(const nlohmann::json& j, const ModelParams& defaults = {});

}  // namespace sigmaevo
