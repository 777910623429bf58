#include "doctest.h"

#include "cnls/harness.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace cnls;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CNLS_CLI_PATH) + " " + args + " > cli_last.log 2>&1";
    const int st = std::system(cmd.c_str());
    REQUIRE(st != -1);
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("round-trip number formatting") {
    for (double x : {1.0 / 3.0, 4.0 / 3.0, 1e-17, 123456.789, -0.1, 0.0}) {
        const std::string s = format_g17(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("config parsing and validation") {
    write_file("cfg_ok.json", R"({"params": {"n": 1, "q": 2, "b": 3, "omega": 1},
        "grid": {"r_max": 20, "num_points": 256},
        "minimizer": {"max_iter": 4000, "restarts": 2}})");
    const RunConfig cfg = load_config("cfg_ok.json");
    CHECK(cfg.params.b == 3.0);
    CHECK(cfg.num_points == 256);
    CHECK(cfg.minimizer.restarts == 2);
    CHECK(!cfg.sweep.has_value());

    CHECK_THROWS_AS(load_config("no_such_file.json"), std::runtime_error);

    write_file("cfg_bad_json.json", "{ not json");
    CHECK_THROWS_AS(load_config("cfg_bad_json.json"), std::runtime_error);

    write_file("cfg_bad_params.json", R"({"params": {"n": 1, "q": 2, "omega": 0.5}})");
    CHECK_THROWS_AS(load_config("cfg_bad_params.json"), std::runtime_error);

    write_file("cfg_unknown.json", R"({"params": {"n": 1, "q": 2}, "bogus": 1})");
    CHECK_THROWS_AS(load_config("cfg_unknown.json"), std::runtime_error);

    write_file("cfg_bad_sweep.json", R"({"params": {"n": 1, "q": 2},
        "sweep": {"variable": "mass", "start": 1, "stop": 2, "count": 3}})");
    CHECK_THROWS_AS(load_config("cfg_bad_sweep.json"), std::runtime_error);

    // a sweep crossing into invalid parameters is rejected up front
    write_file("cfg_sweep_invalid_point.json", R"({"params": {"n": 1, "q": 2},
        "sweep": {"variable": "omega", "start": 0.5, "stop": 2, "count": 4}})");
    CHECK_THROWS_AS(load_config("cfg_sweep_invalid_point.json"), std::runtime_error);
}

TEST_CASE("usage errors exit with the config code") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("nonsense") == 2);
    CHECK(run_cli("solve") == 2);                    // missing --config
    CHECK(run_cli("verify --level bogus") == 2);
    CHECK(run_cli("solve --config no_such_file.json") == 2);
}

TEST_CASE("thresholds table") {
    CHECK(run_cli("thresholds --csv thr.csv") == 0);
    const std::string log = slurp("cli_last.log");
    CHECK(log.find("eps_opt") != std::string::npos);
    CHECK(log.find("n/a") != std::string::npos); // n = 3, q = 3 is out of range
    const std::string csv = slurp("thr.csv");
    CHECK(csv.rfind("n,q,omega,C,D,eps_opt,b_opt,note", 0) == 0);
}

TEST_CASE("solve writes profile and report") {
    write_file("cfg_solve.json", R"({"params": {"n": 1, "q": 2, "b": 3, "omega": 1},
        "grid": {"r_max": 20, "num_points": 256},
        "minimizer": {"max_iter": 4000, "restarts": 2},
        "out_dir": "cli_out_solve"})");
    CHECK(run_cli("solve --config cfg_solve.json") == 0);

    const std::string csv = slurp("cli_out_solve/profile.csv");
    CHECK(csv.rfind("# n = 1", 0) == 0);
    CHECK(csv.find("# classification = nontrivial") != std::string::npos);
    CHECK(csv.find("r,u,v") != std::string::npos);

    nlohmann::json rep = nlohmann::json::parse(slurp("cli_out_solve/report.json"));
    CHECK(rep["converged"].get<bool>());
    CHECK(rep["m"].get<double>() == doctest::Approx((8.0 / 3.0) / 4.0).epsilon(0.02));
    CHECK(rep["classification"].get<std::string>() == "nontrivial");
    CHECK(rep["restart_energies"].size() == 2);
}

TEST_CASE("sweep writes ordered rows") {
    write_file("cfg_sweep.json", R"({"params": {"n": 1, "q": 2, "b": 0, "omega": 1},
        "grid": {"r_max": 20, "num_points": 256},
        "minimizer": {"max_iter": 4000, "restarts": 2},
        "sweep": {"variable": "b", "start": 0.5, "stop": 3, "count": 3},
        "out_dir": "cli_out_sweep"})");
    CHECK(run_cli("sweep --config cfg_sweep.json --threads 2") == 0);

    std::ifstream in("cli_out_sweep/sweep.csv");
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "b,m,u_l2,v_l2,classification,I_u0,I_v0,C,D,I_trial,status");
    int rows = 0;
    double prev = -1.0;
    while (std::getline(in, line)) {
        ++rows;
        const double axis = std::strtod(line.c_str(), nullptr);
        CHECK(axis > prev);
        prev = axis;
        CHECK(line.find("ok") != std::string::npos);
        // 10 commas -> 11 columns
        CHECK(std::count(line.begin(), line.end(), ',') == 10);
    }
    CHECK(rows == 3);
}

TEST_CASE("fast verification level passes") {
    CHECK(run_cli("verify --level fast") == 0);
    const std::string log = slurp("cli_last.log");
    CHECK(log.find("[PASS]") != std::string::npos);
    CHECK(log.find("all checks passed") != std::string::npos);
}

} // TEST_SUITE
