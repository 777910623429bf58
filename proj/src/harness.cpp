#include "cnls/harness.hpp"

#include "cnls/functionals.hpp"
#include "cnls/operators.hpp"
#include "cnls/scalar.hpp"
#include "cnls/thresholds.hpp"
#include "cnls/verify.hpp"

#include "json.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cnls {

namespace {

using nlohmann::json;

double get_num(const json& j, const char* key, double dflt, bool* present = nullptr) {
    if (!j.contains(key)) {
        if (present)
            *present = false;
        return dflt;
    }
    if (present)
        *present = true;
    if (!j.at(key).is_number())
        throw std::runtime_error(std::string("config: '") + key + "' must be a number");
    return j.at(key).get<double>();
}

int get_int(const json& j, const char* key, int dflt) {
    const double v = get_num(j, key, dflt);
    if (v != std::floor(v))
        throw std::runtime_error(std::string("config: '") + key + "' must be an integer");
    return static_cast<int>(v);
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k)
                ok = true;
        if (!ok)
            throw std::runtime_error(std::string("config: unknown key '") + it.key() +
                                     "' in " + where);
    }
}

GridPtr grid_for(const RunConfig& cfg) {
    double rmax = cfg.r_max;
    int N = cfg.num_points;
    if (rmax <= 0.0 || N <= 0) {
        double dr;
        int dn;
        default_grid_settings(cfg.params.n, dr, dn);
        if (rmax <= 0.0)
            rmax = dr;
        if (N <= 0)
            N = dn;
    }
    return make_grid(cfg.params.n, rmax, N);
}

std::vector<double> sweep_values(const SweepSpec& s) {
    std::vector<double> vals(s.count);
    if (s.count == 1) {
        vals[0] = s.start;
        return vals;
    }
    if (s.spacing == "log") {
        const double la = std::log(s.start), lb = std::log(s.stop);
        for (int i = 0; i < s.count; ++i)
            vals[i] = std::exp(la + (lb - la) * i / (s.count - 1));
    } else {
        for (int i = 0; i < s.count; ++i)
            vals[i] = s.start + (s.stop - s.start) * i / (s.count - 1);
    }
    return vals;
}

ProblemParams with_axis(ProblemParams p, const std::string& var, double val) {
    if (var == "b")
        p.b = val;
    else if (var == "omega")
        p.omega = val;
    else
        p.q = val;
    return p;
}

} // namespace

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config: JSON parse error: ") + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("config: top level must be an object");
    reject_unknown(j, {"params", "grid", "minimizer", "sweep", "out_dir"}, "top level");

    RunConfig cfg;
    if (!j.contains("params") || !j.at("params").is_object())
        throw std::runtime_error("config: missing 'params' object");
    {
        const json& p = j.at("params");
        reject_unknown(p, {"n", "q", "b", "omega"}, "'params'");
        cfg.params.n = get_int(p, "n", 1);
        cfg.params.q = get_num(p, "q", 2.0);
        cfg.params.b = get_num(p, "b", 0.0);
        cfg.params.omega = get_num(p, "omega", 1.0);
        const ValidationResult v = validate_params(cfg.params);
        if (!v.valid)
            throw std::runtime_error("config: invalid params: " + v.reason);
    }
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        reject_unknown(g, {"r_max", "num_points"}, "'grid'");
        cfg.r_max = get_num(g, "r_max", 0.0);
        cfg.num_points = get_int(g, "num_points", 0);
        if (cfg.r_max <= 0.0)
            throw std::runtime_error("config: grid.r_max must be > 0");
        if (cfg.num_points < 16)
            throw std::runtime_error("config: grid.num_points must be >= 16");
    }
    if (j.contains("minimizer")) {
        const json& m = j.at("minimizer");
        reject_unknown(m,
                       {"max_iter", "step_size", "tol_energy", "tol_residual",
                        "component_floor", "restarts"},
                       "'minimizer'");
        cfg.minimizer.max_iter = get_int(m, "max_iter", cfg.minimizer.max_iter);
        cfg.minimizer.step_size = get_num(m, "step_size", cfg.minimizer.step_size);
        cfg.minimizer.tol_energy = get_num(m, "tol_energy", cfg.minimizer.tol_energy);
        cfg.minimizer.tol_residual =
            get_num(m, "tol_residual", cfg.minimizer.tol_residual);
        cfg.minimizer.component_floor =
            get_num(m, "component_floor", cfg.minimizer.component_floor);
        cfg.minimizer.restarts = get_int(m, "restarts", cfg.minimizer.restarts);
        if (cfg.minimizer.max_iter < 1 || cfg.minimizer.restarts < 1 ||
            cfg.minimizer.tol_energy <= 0.0 || cfg.minimizer.tol_residual <= 0.0 ||
            cfg.minimizer.step_size <= 0.0 || cfg.minimizer.component_floor <= 0.0)
            throw std::runtime_error("config: minimizer settings must be positive");
    }
    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        reject_unknown(s, {"variable", "start", "stop", "count", "spacing"}, "'sweep'");
        SweepSpec spec;
        if (!s.contains("variable") || !s.at("variable").is_string())
            throw std::runtime_error("config: sweep.variable must be a string");
        spec.variable = s.at("variable").get<std::string>();
        if (spec.variable != "b" && spec.variable != "omega" && spec.variable != "q")
            throw std::runtime_error("config: sweep.variable must be b, omega or q");
        spec.start = get_num(s, "start", 0.0);
        spec.stop = get_num(s, "stop", spec.start);
        spec.count = get_int(s, "count", 1);
        if (s.contains("spacing")) {
            spec.spacing = s.at("spacing").get<std::string>();
            if (spec.spacing != "linear" && spec.spacing != "log")
                throw std::runtime_error("config: sweep.spacing must be linear or log");
        }
        if (spec.count < 1 || spec.count > 100000)
            throw std::runtime_error("config: sweep.count must be in [1, 100000]");
        if (spec.spacing == "log" && (spec.start <= 0.0 || spec.stop <= 0.0))
            throw std::runtime_error("config: log spacing needs positive endpoints");
        for (double v : sweep_values(spec)) {
            const ValidationResult vr = validate_params(with_axis(cfg.params, spec.variable, v));
            if (!vr.valid)
                throw std::runtime_error("config: sweep point " + format_g17(v) +
                                         " invalid: " + vr.reason);
        }
        cfg.sweep = spec;
    }
    if (j.contains("out_dir")) {
        if (!j.at("out_dir").is_string())
            throw std::runtime_error("config: out_dir must be a string");
        cfg.out_dir = j.at("out_dir").get<std::string>();
    }
    return cfg;
}

int cmd_solve(const RunConfig& cfg, std::ostream& log) {
    const GridPtr grid = grid_for(cfg);
    const GroundStateReport rep = minimize_ground_state(cfg.params, grid, cfg.minimizer);
    const VerificationReport ver =
        verify_ground_state(rep, cfg.params, cfg.minimizer.tol_residual);

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    const std::string csv_path = cfg.out_dir + "/profile.csv";
    const std::string json_path = cfg.out_dir + "/report.json";

    std::ofstream csv(csv_path);
    if (!csv) {
        log << "cannot write " << csv_path << "\n";
        return exit_numerical;
    }
    csv << "# n = " << cfg.params.n << "\n";
    csv << "# q = " << format_g17(cfg.params.q) << "\n";
    csv << "# b = " << format_g17(cfg.params.b) << "\n";
    csv << "# omega = " << format_g17(cfg.params.omega) << "\n";
    csv << "# m = " << format_g17(rep.m) << "\n";
    csv << "# tau_residual = " << format_g17(rep.tau_residual) << "\n";
    csv << "# classification = " << to_string(rep.classification) << "\n";
    csv << "r,u,v\n";
    for (int i = 0; i < grid->num_points; ++i)
        csv << format_g17(grid->r[i]) << "," << format_g17(rep.state.u.values[i]) << ","
            << format_g17(rep.state.v.values[i]) << "\n";
    csv.close();

    json out;
    out["params"] = {{"n", cfg.params.n},
                     {"q", cfg.params.q},
                     {"b", cfg.params.b},
                     {"omega", cfg.params.omega}};
    out["grid"] = {{"r_max", grid->r_max}, {"num_points", grid->num_points}};
    out["m"] = rep.m;
    out["classification"] = to_string(rep.classification);
    out["tau_residual"] = rep.tau_residual;
    out["el_residual"] = rep.el_residual;
    out["iterations"] = rep.iterations;
    out["restarts_used"] = rep.restarts_used;
    out["converged"] = rep.converged;
    out["restart_energies"] = rep.restart_energies;
    out["u_l2"] = std::sqrt(lp_norm_pow(rep.state.u, 2.0));
    out["v_l2"] = std::sqrt(lp_norm_pow(rep.state.v, 2.0));
    out["verification"] = {{"tau_ok", ver.tau_ok},
                           {"residual_ok", ver.residual_ok},
                           {"profile_ok", ver.profile_ok},
                           {"identity_ok", ver.identity_ok},
                           {"tau_rel", ver.tau_rel},
                           {"residual", ver.residual},
                           {"identity_rel", ver.identity_rel}};
    std::ofstream js(json_path);
    if (!js) {
        log << "cannot write " << json_path << "\n";
        return exit_numerical;
    }
    js << out.dump(2) << "\n";

    log << "m = " << format_g17(rep.m) << "  classification = "
        << to_string(rep.classification) << "  (" << rep.iterations << " iterations, "
        << rep.restarts_used << " restarts)\n";
    log << "wrote " << csv_path << " and " << json_path << "\n";

    if (!rep.converged || !ver.all()) {
        log << "solve did not meet the convergence/verification targets\n";
        return exit_numerical;
    }
    return exit_ok;
}

int cmd_sweep(const RunConfig& cfg, int threads, std::ostream& log) {
    if (!cfg.sweep) {
        log << "config has no sweep section\n";
        return exit_config;
    }
    const SweepSpec& spec = *cfg.sweep;
    const std::vector<double> vals = sweep_values(spec);
    const GridPtr grid = grid_for(cfg);

    struct Row {
        double axis = 0.0;
        std::string text; // CSV tail after the axis value
        bool ok = false;
    };
    std::vector<Row> rows(vals.size());

    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(vals.size())));

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= vals.size())
                return;
            const ProblemParams p = with_axis(cfg.params, spec.variable, vals[i]);
            Row& row = rows[i];
            row.axis = vals[i];
            try {
                const GroundStateReport rep = minimize_ground_state(p, grid, cfg.minimizer);
                const ScalarGroundState u0 = solve_scalar_profile(p.q, 1.0, grid);
                const ScalarGroundState v0 =
                    solve_scalar_profile(p.q, p.omega * p.omega, grid);
                const TrialState tr = build_trial_state(p, 1.0, u0);
                const double ul2 = std::sqrt(lp_norm_pow(rep.state.u, 2.0));
                const double vl2 = std::sqrt(lp_norm_pow(rep.state.v, 2.0));
                const bool d_ok = p.n == 1 && p.q >= 2.0 && p.omega >= 1.0;
                std::ostringstream os;
                os << format_g17(rep.m) << "," << format_g17(ul2) << ","
                   << format_g17(vl2) << "," << to_string(rep.classification) << ","
                   << format_g17(u0.energy) << "," << format_g17(v0.energy) << ","
                   << format_g17(constant_C(p)) << ","
                   << (d_ok ? format_g17(constant_D(p.q, p.omega)) : std::string("n/a"))
                   << "," << format_g17(tr.energy) << ","
                   << (rep.converged ? "ok" : "not_converged");
                row.text = os.str();
                row.ok = rep.converged;
            } catch (const std::exception& e) {
                row.text = std::string(",,,,,,,,error: ") + e.what();
                row.ok = false;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (std::thread& t : pool)
        t.join();

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    const std::string csv_path = cfg.out_dir + "/sweep.csv";
    std::ofstream csv(csv_path);
    if (!csv) {
        log << "cannot write " << csv_path << "\n";
        return exit_numerical;
    }
    csv << spec.variable << ",m,u_l2,v_l2,classification,I_u0,I_v0,C,D,I_trial,status\n";
    bool all_ok = true;
    for (const Row& row : rows) {
        csv << format_g17(row.axis) << "," << row.text << "\n";
        all_ok = all_ok && row.ok;
    }
    log << "wrote " << csv_path << " (" << rows.size() << " points, " << threads
        << " threads)\n";
    return all_ok ? exit_ok : exit_numerical;
}

int cmd_thresholds(const std::vector<int>& ns, const std::vector<double>& qs,
                   const std::vector<double>& omegas, const std::string& csv_path,
                   std::ostream& out) {
    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) {
            out << "cannot write " << csv_path << "\n";
            return exit_numerical;
        }
        csv << "n,q,omega,C,D,eps_opt,b_opt,note\n";
    }
    char line[256];
    std::snprintf(line, sizeof line, "%3s %6s %7s %14s %14s %12s %14s  %s\n", "n", "q",
                  "omega", "C", "D", "eps_opt", "b_opt", "note");
    out << line;
    for (int n : ns) {
        for (double q : qs) {
            for (double w : omegas) {
                ProblemParams p{n, q, 0.0, w};
                const ValidationResult vr = validate_params(p);
                if (!vr.valid) {
                    std::snprintf(line, sizeof line, "%3d %6g %7g %14s %14s %12s %14s  %s\n",
                                  n, q, w, "n/a", "n/a", "n/a", "n/a", vr.reason.c_str());
                    out << line;
                    if (csv.is_open())
                        csv << n << "," << format_g17(q) << "," << format_g17(w)
                            << ",n/a,n/a,n/a,n/a," << vr.reason << "\n";
                    continue;
                }
                const ThresholdReport tr = threshold_report(p);
                std::string dstr = tr.d_const ? format_g17(*tr.d_const) : "n/a";
                std::snprintf(line, sizeof line,
                              "%3d %6g %7g %14.8g %14s %12.6g %14.8g  %s\n", n, q, w,
                              tr.c_const, tr.d_const ? dstr.c_str() : "n/a", tr.eps_opt,
                              tr.b_opt, tr.note.c_str());
                out << line;
                if (csv.is_open())
                    csv << n << "," << format_g17(q) << "," << format_g17(w) << ","
                        << format_g17(tr.c_const) << "," << dstr << ","
                        << format_g17(tr.eps_opt) << "," << format_g17(tr.b_opt) << ","
                        << tr.note << "\n";
            }
        }
    }
    return exit_ok;
}

int cmd_verify(const std::string& level, std::ostream& out) {
    if (level != "fast" && level != "full") {
        out << "verify level must be 'fast' or 'full'\n";
        return exit_config;
    }
    std::vector<CheckResult> results = run_fast_suite();
    if (level == "full") {
        std::vector<CheckResult> acc = run_acceptance(0);
        results.insert(results.end(), acc.begin(), acc.end());
    }
    for (const CheckResult& c : results)
        out << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail
            << "\n";
    out << (all_pass(results) ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass(results) ? exit_ok : exit_numerical;
}

} // namespace cnls
