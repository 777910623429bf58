#include "cnls/harness.hpp"

#include "CLI11.hpp"

#include <exception>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"Ground states of a coupled nonlinear Schrodinger system on radial meshes"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string level = "fast";
    std::string csv_path;
    int threads = 0;
    std::vector<int> ns{1, 2, 3};
    std::vector<double> qs{1.5, 2.0, 3.0};
    std::vector<double> omegas{1.0, 2.0, 5.0};

    CLI::App* solve = app.add_subcommand("solve", "Minimize the energy for one parameter set");
    solve->add_option("--config", config_path, "JSON config file")->required();
    solve->add_option("--out", out_dir, "Output directory (overrides the config)");

    CLI::App* sweep = app.add_subcommand("sweep", "Solve along a parameter lattice");
    sweep->add_option("--config", config_path, "JSON config file (needs a sweep section)")
        ->required();
    sweep->add_option("--out", out_dir, "Output directory (overrides the config)");
    sweep->add_option("--threads", threads, "Worker threads, 0 = hardware default");

    CLI::App* thr =
        app.add_subcommand("thresholds", "Tabulate the closed-form coupling thresholds");
    thr->add_option("--n", ns, "Dimensions");
    thr->add_option("--q", qs, "Nonlinearity exponents");
    thr->add_option("--omega", omegas, "Frequency ratios");
    thr->add_option("--csv", csv_path, "Also write the table as CSV to this path");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--level", level, "fast (closed-form checks) or full (adds end-to-end)")
        ->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cnls::exit_ok : cnls::exit_config;
    }

    try {
        if (solve->parsed() || sweep->parsed()) {
            cnls::RunConfig cfg = cnls::load_config(config_path);
            if (!out_dir.empty())
                cfg.out_dir = out_dir;
            return solve->parsed() ? cnls::cmd_solve(cfg, std::cout)
                                   : cnls::cmd_sweep(cfg, threads, std::cout);
        }
        if (thr->parsed())
            return cnls::cmd_thresholds(ns, qs, omegas, csv_path, std::cout);
        return cnls::cmd_verify(level, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cnls::exit_config;
    }
}
