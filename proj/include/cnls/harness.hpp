#pragma once

#include "cnls/grid.hpp"
#include "cnls/minimize.hpp"
#include "cnls/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cnls {

inline constexpr int exit_ok = 0;
inline constexpr int exit_numerical = 1;
inline constexpr int exit_config = 2;

struct SweepSpec {
    std::string variable; // "b" | "omega" | "q"
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    std::string spacing = "linear"; // "linear" | "log"
};

struct RunConfig {
    ProblemParams params;
    double r_max = 0.0;   // 0 = dimension default
    int num_points = 0;   // 0 = dimension default
    MinimizerConfig minimizer;
    std::optional<SweepSpec> sweep;
    std::string out_dir = "out";
};

// Parses and validates the JSON config.  Throws std::runtime_error with a
// diagnostic on malformed input or invalid parameters.
RunConfig load_config(const std::string& path);

// solve: profile CSV ('#' metadata then r,u,v) + JSON report.  Returns the
// process exit code.
int cmd_solve(const RunConfig& cfg, std::ostream& log);

// sweep: one CSV row per lattice point, rows in axis order; points dispatched
// over `threads` workers, merged deterministically.
int cmd_sweep(const RunConfig& cfg, int threads, std::ostream& log);

// thresholds table for the cross product of the given lists.
int cmd_thresholds(const std::vector<int>& ns, const std::vector<double>& qs,
                   const std::vector<double>& omegas, const std::string& csv_path,
                   std::ostream& out);

// verification suite; level "fast" or "full"
int cmd_verify(const std::string& level, std::ostream& out);

// 17 significant digits, round-trip exact for doubles
std::string format_g17(double x);

} // namespace cnls
