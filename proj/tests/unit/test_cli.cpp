#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kTmp = fs::temp_directory_path() / "sigmaevo_cli_tests";

struct Run {
    int code;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args) {
    fs::create_directories(kTmp);
    auto o = kTmp / "stdout.txt", e = kTmp / "stderr.txt";
    std::string cmd = std::string(SIGMAEVO_CLI) + " " + args + " >" + o.string() + " 2>" + e.string();
    int st = std::system(cmd.c_str());
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, slurp(o), slurp(e)};
}

fs::path write_config(const std::string& name, const nlohmann::json& j) {
    fs::create_directories(kTmp);
    auto p = kTmp / name;
    std::ofstream(p) << j.dump(2);
    return p;
}

nlohmann::json cp1_config() {
    return {{"params", {{"alpha", 0.4}, {"beta", 1.0}, {"sigma", 2.0}, {"mu", 3.0}, {"n", 1}}},
            {"grid", {{"points", 64}, {"length", 20.0}}},
            {"times", {{"t_end", 1.0}, {"steps", 16}}},
            {"u0", {{"profile", "gaussian"}, {"width", 1.0}}},
            {"f", {{"profile", "gaussian"}, {"width", 2.0}, {"time", {{"kind", "cos"}, {"omega", 1.0}}}}}};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ml-eval prints e for E_{1,1}(1)") {
    auto r = run("ml-eval --alpha 1 --beta 1 --z-re 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("z_re,z_im,re,im") != std::string::npos);
    CHECK(r.out.find("2.71828182845904") != std::string::npos);
}

TEST_CASE("ml-eval grid") {
    auto r = run("ml-eval --alpha 0.5 --beta 1 --z-grid -1:1:5");
    CHECK(r.code == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 6);
}

TEST_CASE("exit codes") {
    CHECK(run("ml-eval --alpha -1 --z-re 1").code == 2);
    CHECK(run("ml-eval --alpha 2.5 --beta 1 --z-re -500").code == 3);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("verify no-such-suite").code == 2);
    CHECK(run("solve cp1 --config /nonexistent.json --out " + (kTmp / "x").string()).code == 2);
}

TEST_CASE("json errors") {
    auto r = run("--json-errors ml-eval --alpha -1 --z-re 1");
    CHECK(r.code == 2);
    auto j = nlohmann::json::parse(r.err);
    CHECK(j["error"]["code"] == 2);
    CHECK(j["error"].contains("type"));
    CHECK(j["error"].contains("message"));
}

TEST_CASE("solve is deterministic and the manifest round-trips") {
    auto cfg = write_config("cp1.json", cp1_config());
    auto d1 = kTmp / "run1", d2 = kTmp / "run2", d3 = kTmp / "run3";
    for (auto& d : {d1, d2, d3}) fs::remove_all(d);
    CHECK(run("solve cp1 --config " + cfg.string() + " --out " + d1.string()).code == 0);
    CHECK(run("solve cp1 --config " + cfg.string() + " --out " + d2.string()).code == 0);
    CHECK(slurp(d1 / "state_00016.csv") == slurp(d2 / "state_00016.csv"));
    CHECK(fs::exists(d1 / "norm_l2.csv"));
    CHECK(slurp(d1 / "norm_linf.csv").rfind("t,value", 0) == 0);
    CHECK(run("solve cp1 --config " + (d1 / "manifest.json").string() + " --out " + d3.string()).code == 0);
    CHECK(slurp(d1 / "state_00016.csv") == slurp(d3 / "state_00016.csv"));
}

TEST_CASE("solve rejects bad configs") {
    auto j = cp1_config();
    j["params"]["alpha"] = 0.4;
    auto cfg = write_config("cp2_bad.json", j);
    auto r = run("solve cp2 --config " + cfg.string() + " --out " + (kTmp / "bad").string());
    CHECK(r.code == 2);
    CHECK(r.err.find("cp2 requires 1/2 < alpha <= 1") != std::string::npos);
    j = cp1_config();
    j["unexpected"] = 1;
    cfg = write_config("unknown_key.json", j);
    CHECK(run("solve cp1 --config " + cfg.string() + " --out " + (kTmp / "bad").string()).code == 2);
}

TEST_CASE("kernel writes csv and json") {
    auto prefix = kTmp / "heat";
    auto r = run("kernel --kernel K --t 0.5 --alpha 1 --beta 1 --sigma 2 --n 1 --r-min 0.05 --r-max 4 --count 20 --out " +
                 prefix.string());
    CHECK(r.code == 0);
    CHECK(slurp(prefix.string() + ".csv").rfind("r,value,imag,error_est", 0) == 0);
    auto meta = nlohmann::json::parse(slurp(prefix.string() + ".json"));
    CHECK(meta.is_object());
}

TEST_CASE("verify writes reports") {
    auto d = kTmp / "verify";
    fs::remove_all(d);
    auto r = run("verify regions --out " + d.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(fs::exists(d / "report.json"));
    CHECK(fs::exists(d / "report.csv"));
}

}
