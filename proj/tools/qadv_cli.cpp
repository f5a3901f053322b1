// Command-line front end: solve one configured instance, reproduce the
// benchmark tables, or pre-warm the angle cache.
//
// Exit codes: 0 ok, 2 configuration error, 3 numeric failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qadv/solver.hpp"

using namespace qadv;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "qadv 1.0.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BenchRow {
    int p;
    int n;
    double ref_error;
    double ref_success;
    long ref_1q;
    long ref_cnot;
    int ref_total_qubits;
};

struct BenchTable {
    int id;
    const char* name;
    ProblemSpec base;
    std::vector<BenchRow> rows;
};

InitialCondition ic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ConfigError("initial_condition.kind: required string");
    std::string kind = j["kind"];
    if (kind == "gaussian") return InitialCondition::gaussian();
    if (kind == "sine_sum") return InitialCondition::sine_sum();
    if (kind == "wavepacket") return InitialCondition::wavepacket();
    if (kind == "rectangle") return InitialCondition::rectangle();
    if (kind == "gaussian2d") return InitialCondition::gaussian2d();
    if (kind == "mixed_wave") return InitialCondition::mixed_wave();
    if (kind == "literal_samples") {
        if (!j.contains("samples") || !j["samples"].is_array())
            throw ConfigError("initial_condition.samples: required array");
        std::vector<double> s = j["samples"].get<std::vector<double>>();
        if (s.empty() || (s.size() & (s.size() - 1)) != 0)
            throw ConfigError("initial_condition.samples: length must be a power of two");
        return InitialCondition::literal_samples(std::move(s));
    }
    if (kind == "literal_fourier") {
        if (!j.contains("modes_re") || !j["modes_re"].is_array())
            throw ConfigError("initial_condition.modes_re: required array");
        std::vector<double> re = j["modes_re"].get<std::vector<double>>();
        std::vector<double> im(re.size(), 0.0);
        if (j.contains("modes_im")) im = j["modes_im"].get<std::vector<double>>();
        if (re.size() != im.size()) throw ConfigError("initial_condition.modes_im: length mismatch");
        if (re.empty() || (re.size() & (re.size() - 1)) != 0)
            throw ConfigError("initial_condition.modes_re: length must be a power of two");
        std::vector<cd> modes(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) modes[i] = cd(re[i], im[i]);
        return InitialCondition::literal_fourier(std::move(modes));
    }
    throw ConfigError("initial_condition.kind: unknown kind '" + kind + "'");
}

double require_number(const json& j, const char* field, double lo, double hi) {
    if (!j.contains(field) || !j[field].is_number())
        throw ConfigError(std::string(field) + ": required number");
    double v = j[field];
    if (v < lo || v > hi) throw ConfigError(std::string(field) + ": out of range");
    return v;
}

ProblemSpec spec_from_config(const json& cfg) {
    ProblemSpec s;
    if (cfg.contains("dim")) {
        if (!cfg["dim"].is_number_integer()) throw ConfigError("dim: must be 1 or 2");
        s.dim = cfg["dim"];
        if (s.dim != 1 && s.dim != 2) throw ConfigError("dim: must be 1 or 2");
    }
    if (!cfg.contains("c")) throw ConfigError("c: required (number, or [cx, cy] for dim 2)");
    if (cfg["c"].is_number()) {
        s.cx = cfg["c"];
        s.cy = cfg["c"];
    } else if (cfg["c"].is_array() && cfg["c"].size() == 2) {
        s.cx = cfg["c"][0];
        s.cy = cfg["c"][1];
    } else {
        throw ConfigError("c: must be a number or a pair");
    }
    s.nu = require_number(cfg, "nu", 0.0, 1e6);
    s.T = require_number(cfg, "time", 0.0, 1e6);
    if (cfg.contains("domain")) s.domain = require_number(cfg, "domain", 1e-9, 1e9);
    if (!cfg.contains("half_order") || !cfg["half_order"].is_number_integer())
        throw ConfigError("half_order: required integer >= 1");
    s.p = cfg["half_order"];
    if (s.p < 1 || s.p > 64) throw ConfigError("half_order: out of range");
    if (!cfg.contains("spatial_qubits")) throw ConfigError("spatial_qubits: required (integer or \"auto\")");
    if (cfg["spatial_qubits"].is_string()) {
        if (cfg["spatial_qubits"] != "auto") throw ConfigError("spatial_qubits: integer or \"auto\"");
        s.n = 0;
        s.target_eps = require_number(cfg, "target_eps", 1e-12, 0.999);
    } else if (cfg["spatial_qubits"].is_number_integer()) {
        s.n = cfg["spatial_qubits"];
        if (s.n < 1 || s.n > 24) throw ConfigError("spatial_qubits: out of range");
    } else {
        throw ConfigError("spatial_qubits: integer or \"auto\"");
    }
    if (cfg.contains("eps_poly")) s.eps_poly = require_number(cfg, "eps_poly", 1e-14, 0.5);
    if (cfg.contains("angle_tol")) s.angle_tol = require_number(cfg, "angle_tol", 1e-14, 1e-2);
    if (!cfg.contains("initial_condition")) throw ConfigError("initial_condition: required object");
    s.ic = ic_from_json(cfg["initial_condition"]);
    if (s.dim == 2 && s.ic.dim != 2) throw ConfigError("initial_condition: dim 2 requires a 2D kind");
    if (s.dim == 1 && s.ic.dim != 1) throw ConfigError("initial_condition: dim 1 requires a 1D kind");
    return s;
}

json summary_json(const ProblemSpec& s, const SolveReport& rep) {
    json out;
    out["version"] = kVersion;
    json spec;
    spec["dim"] = s.dim;
    if (s.dim == 2)
        spec["c"] = {s.cx, s.cy};
    else
        spec["c"] = s.cx;
    spec["nu"] = s.nu;
    spec["domain"] = s.domain;
    spec["time"] = s.T;
    spec["half_order"] = s.p;
    spec["spatial_qubits"] = rep.n_used;
    spec["eps_poly"] = s.eps_poly;
    out["spec"] = spec;
    out["error_vs_exact"] = rep.error_vs_exact;
    out["error_vs_semidiscrete"] = rep.error_vs_semidiscrete;
    out["success_rate"] = rep.success_rate;
    out["predicted_success"] = rep.predicted_success;
    out["one_qubit_gates"] = rep.gate_counts.one_qubit;
    out["cnot_gates"] = rep.gate_counts.cnot;
    out["total_qubits"] = rep.total_qubits;
    out["ancilla_qubits"] = rep.ancillas;
    out["readout_scale"] = rep.readout_scale;
    json deg;
    deg["R1"] = rep.degrees_x.R1;
    deg["R2"] = rep.degrees_x.R2;
    deg["total_degree"] = rep.degrees_x.total_degree;
    out["degrees_x"] = deg;
    if (s.dim == 2) {
        json degy;
        degy["R1"] = rep.degrees_y.R1;
        degy["R2"] = rep.degrees_y.R2;
        degy["total_degree"] = rep.degrees_y.total_degree;
        out["degrees_y"] = degy;
    }
    json theory;
    theory["B"] = rep.theory.B;
    theory["tau"] = rep.theory.tau;
    theory["mu1"] = rep.theory.mu1;
    theory["l2_bound"] = rep.theory.l2_bound;
    theory["technical_ok_diffusion"] = rep.theory.technical_ok_diffusion;
    theory["technical_ok_advection"] = rep.theory.technical_ok_advection;
    theory["planned_n"] = rep.theory.planned_n;
    theory["complexity_estimate"] = rep.theory.complexity_estimate;
    out["theory"] = theory;
    return out;
}

void write_solution_files(const ProblemSpec& s, const SolveReport& rep, const std::string& prefix) {
    const long N = 1L << rep.n_used;
    const double dx = s.domain / double(N);
    {
        std::ofstream f(prefix + "_solution.csv");
        if (!f) throw ConfigError("output_prefix: cannot open " + prefix + "_solution.csv");
        char line[128];
        if (s.dim == 1) {
            f << "x,value\n";
            for (long j = 0; j < N; ++j) {
                std::snprintf(line, sizeof line, "%.17g,%.17g\n", double(j) * dx,
                              rep.grid_solution[std::size_t(j)]);
                f << line;
            }
        } else {
            f << "x,y,value\n";
            for (long jy = 0; jy < N; ++jy)
                for (long jx = 0; jx < N; ++jx) {
                    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", double(jx) * dx,
                                  double(jy) * dx, rep.grid_solution[std::size_t(jy) * N + jx]);
                    f << line;
                }
        }
    }
    {
        std::ofstream f(prefix + "_reference.csv");
        char line[192];
        GridSpec grid = GridSpec::make(s.domain, rep.n_used);
        if (s.dim == 1) {
            auto exact = exact_solution(s.ic.x, s.cx, s.nu, s.domain, s.T, N);
            auto semi = semidiscrete_solution(s.ic.x, s.cx, s.nu, s.p, grid, s.T, SemiVariant::Dsq);
            f << "x,exact,semidiscrete\n";
            for (long j = 0; j < N; ++j) {
                std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", double(j) * dx,
                              exact[std::size_t(j)], semi[std::size_t(j)].real());
                f << line;
            }
        } else {
            auto ux = exact_solution(s.ic.x, s.cx, s.nu, s.domain, s.T, N);
            auto uy = exact_solution(s.ic.y, s.cy, s.nu, s.domain, s.T, N);
            auto vx = semidiscrete_solution(s.ic.x, s.cx, s.nu, s.p, grid, s.T, SemiVariant::Dsq);
            auto vy = semidiscrete_solution(s.ic.y, s.cy, s.nu, s.p, grid, s.T, SemiVariant::Dsq);
            f << "x,y,exact,semidiscrete\n";
            for (long jy = 0; jy < N; ++jy)
                for (long jx = 0; jx < N; ++jx) {
                    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", double(jx) * dx,
                                  double(jy) * dx, ux[std::size_t(jx)] * uy[std::size_t(jy)],
                                  (vx[std::size_t(jx)] * vy[std::size_t(jy)]).real());
                    f << line;
                }
        }
    }
    {
        std::ofstream f(prefix + "_summary.json");
        f << summary_json(s, rep).dump(2) << '\n';
    }
}

int cmd_solve(const std::string& config_path, bool dry_run) {
    json cfg;
    {
        std::ifstream f(config_path);
        if (!f) {
            std::cerr << "config error: cannot open " << config_path << '\n';
            return 2;
        }
        try {
            cfg = json::parse(f);
        } catch (const std::exception& e) {
            std::cerr << "config error: " << e.what() << '\n';
            return 2;
        }
    }
    ProblemSpec s;
    std::string prefix = "qadv_run";
    try {
        s = spec_from_config(cfg);
        if (cfg.contains("output_prefix")) prefix = cfg["output_prefix"];
        if (cfg.contains("cache_dir") && cfg["cache_dir"].is_string())
            set_angle_cache_dir(cfg["cache_dir"]);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (dry_run) {
            auto plan = plan_and_count(s);
            std::printf("planned spatial qubits: %d\n", plan.n_used);
            std::printf("degrees: R1=%ld R2=%ld total=%ld", plan.degrees_x.R1, plan.degrees_x.R2,
                        plan.degrees_x.total_degree);
            if (s.dim == 2)
                std::printf("  (y axis: R1=%ld R2=%ld total=%ld)", plan.degrees_y.R1,
                            plan.degrees_y.R2, plan.degrees_y.total_degree);
            std::printf("\ntotal qubits: %d (%d ancillas)\n", plan.total_qubits, plan.ancillas);
            std::printf("gate counts: %lld 1-qubit, %lld CNOT\n",
                        (long long)plan.gate_counts.one_qubit, (long long)plan.gate_counts.cnot);
            std::printf("predicted success rate: %.6f\n", plan.predicted_success);
            return 0;
        }
        auto rep = solve(s);
        write_solution_files(s, rep, prefix);
        std::printf("error vs exact: %.6e\nerror vs semidiscrete: %.6e\nsuccess rate: %.6f\n",
                    rep.error_vs_exact, rep.error_vs_semidiscrete, rep.success_rate);
        std::printf("wrote %s_solution.csv, %s_reference.csv, %s_summary.json\n", prefix.c_str(),
                    prefix.c_str(), prefix.c_str());
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return 3;
    }
}

std::vector<BenchTable> bench_catalog() {
    std::vector<BenchTable> tables;
    {
        BenchTable t;
        t.id = 1;
        t.name = "1D advection, gaussian";
        t.base.cx = 1.0;
        t.base.nu = 0.0;
        t.base.T = 4.0;
        t.base.ic = InitialCondition::gaussian();
        t.rows = {{1, 8, 2.042e-2, 0.2256, 23433, 16150, 12},
                  {1, 9, 5.047e-3, 0.2256, 49298, 33889, 13},
                  {3, 6, 1.856e-3, 0.2256, 18658, 13636, 11},
                  {3, 7, 3.298e-5, 0.2256, 37386, 27130, 12}};
        tables.push_back(std::move(t));
    }
    {
        BenchTable t;
        t.id = 2;
        t.name = "1D diffusion, sine sum";
        t.base.cx = 0.0;
        t.base.nu = 0.02;
        t.base.T = 0.3;
        t.base.ic = InitialCondition::sine_sum();
        t.rows = {{1, 9, 9.362e-4, 0.7937, 10884, 7686, 12},
                  {2, 8, 5.256e-5, 0.7937, 10069, 7459, 12},
                  {3, 7, 4.998e-5, 0.7937, 5378, 3054, 11}};
        tables.push_back(std::move(t));
    }
    {
        BenchTable t;
        t.id = 3;
        t.name = "1D advection-diffusion, wave packet";
        t.base.cx = 1.0;
        t.base.nu = 1e-3;
        t.base.T = 1.5;
        t.base.ic = InitialCondition::wavepacket();
        t.rows = {{3, 8, 2.662e-4, 0.2398, 27135, 19578, 13},
                  {3, 9, 4.334e-6, 0.2398, 55333, 39729, 14},
                  {7, 6, 5.429e-2, 0.2399, 21663, 17331, 12},
                  {7, 7, 1.483e-5, 0.2398, 40290, 32029, 13}};
        tables.push_back(std::move(t));
    }
    {
        BenchTable t;
        t.id = 4;
        t.name = "1D advection-diffusion, rectangle";
        t.base.cx = 1.0;
        t.base.nu = 0.02;  // the reference data lists 0.2 in one place and 0.02 in
                           // another; only 0.02 reproduces its error and success columns
        t.base.T = 1.0;
        t.base.ic = InitialCondition::rectangle();
        t.rows = {{1, 8, 3.323e-2, 0.2218, 8607, 5970, 12},
                  {3, 7, 3.376e-2, 0.2219, 13187, 9569, 12}};
        tables.push_back(std::move(t));
    }
    {
        BenchTable t;
        t.id = 5;
        t.name = "2D advection, gaussian";
        t.base.dim = 2;
        t.base.cx = 1.5;
        t.base.cy = 2.0 / 3.0;
        t.base.nu = 0.0;
        t.base.T = 0.8;
        t.base.ic = InitialCondition::gaussian2d();
        t.rows = {{1, 7, 1.678e-2, 0.0509, 24468, 21953, 19},
                  {3, 6, 2.164e-4, 0.0509, 17054, 13269, 18}};
        tables.push_back(std::move(t));
    }
    {
        BenchTable t;
        t.id = 6;
        t.name = "2D advection-diffusion, mixed wave";
        t.base.dim = 2;
        t.base.cx = 1.0;
        t.base.cy = 0.5;
        // the reference data prints 0.2, but its gate counts and success rate
        // are only consistent with 0.02 (same slip as the rectangle table)
        t.base.nu = 0.02;
        t.base.T = 0.4;
        t.base.ic = InitialCondition::mixed_wave();
        t.rows = {{1, 8, 2.929e-3, 0.0478, 73580, 71047, 21},
                  {3, 7, 1.858e-6, 0.0477, 28776, 25127, 20}};
        tables.push_back(std::move(t));
    }
    return tables;
}

int cmd_bench(int table_id, const std::string& rows_arg, const std::string& out_dir) {
    auto tables = bench_catalog();
    const BenchTable* table = nullptr;
    for (auto& t : tables)
        if (t.id == table_id) table = &t;
    if (!table) {
        std::cerr << "config error: table must be 1..6\n";
        return 2;
    }
    std::vector<int> rows;
    if (rows_arg.empty()) {
        for (std::size_t i = 0; i < table->rows.size(); ++i) rows.push_back(int(i));
    } else {
        std::stringstream ss(rows_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int r = std::atoi(tok.c_str());
            if (r < 0 || r >= int(table->rows.size())) {
                std::cerr << "config error: row index out of range\n";
                return 2;
            }
            rows.push_back(r);
        }
    }

    // rows are independent; run them in a small worker pool and emit in order
    std::vector<std::future<SolveReport>> futs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const BenchRow& row = table->rows[std::size_t(rows[i])];
        ProblemSpec s = table->base;
        s.p = row.p;
        s.n = row.n;
        futs[i] = std::async(std::launch::async, [s] { return solve(s); });
    }

    try {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        std::string path = out_dir + "/bench_table" + std::to_string(table_id) + ".csv";
        std::ofstream csv(path);
        csv << "order,spatial_qubits,total_qubits,error,ref_error,success,ref_success,"
               "one_qubit,ref_one_qubit,cnot,ref_cnot\n";
        std::printf("Table %d: %s\n", table->id, table->name);
        std::printf("%-6s %-4s %-6s %-12s %-12s %-9s %-9s %-9s %-9s %-9s %-9s\n", "order", "spq",
                    "qubits", "error", "ref", "success", "ref", "1q", "ref", "cnot", "ref");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const BenchRow& row = table->rows[std::size_t(rows[i])];
            SolveReport rep = futs[i].get();
            std::printf("%-6d %-4d %-6d %-12.4e %-12.4e %-9.4f %-9.4f %-9lld %-9ld %-9lld %-9ld\n",
                        2 * row.p, row.n, rep.total_qubits, rep.error_vs_exact, row.ref_error,
                        rep.success_rate, row.ref_success, (long long)rep.gate_counts.one_qubit,
                        row.ref_1q, (long long)rep.gate_counts.cnot, row.ref_cnot);
            char line[256];
            std::snprintf(line, sizeof line, "%d,%d,%d,%.17g,%.17g,%.17g,%.17g,%lld,%ld,%lld,%ld\n",
                          2 * row.p, row.n, rep.total_qubits, rep.error_vs_exact, row.ref_error,
                          rep.success_rate, row.ref_success, (long long)rep.gate_counts.one_qubit,
                          row.ref_1q, (long long)rep.gate_counts.cnot, row.ref_cnot);
            csv << line;
        }
        std::printf("wrote %s\n", path.c_str());
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return 3;
    }
}

int cmd_angles(int degree_cap, double tol) {
    if (angle_cache_dir().empty()) {
        std::cerr << "config error: set QADV_ANGLE_CACHE (or pass --cache-dir) to warm a cache\n";
        return 2;
    }
    try {
        int solved = 0;
        for (const auto& table : bench_catalog())
            for (const auto& row : table.rows) {
                ProblemSpec s = table.base;
                s.p = row.p;
                s.n = row.n;
                const GridSpec grid = GridSpec::make(s.domain, s.n);
                for (double c : {s.cx, s.dim == 2 ? s.cy : s.cx}) {
                    AxisPipeline axis =
                        build_axis_pipeline(c, s.nu, s.T, s.p, grid, s.eps_poly, tol, true);
                    if (axis.q_even.degree() > degree_cap || axis.q_odd.degree() > degree_cap)
                        continue;
                    solve_angles(axis.q_even, tol);
                    ++solved;
                    if (!axis.single_sequence) {
                        solve_angles(axis.q_odd, tol);
                        ++solved;
                    }
                }
            }
        std::printf("angle cache warmed: %d sequences under %s\n", solved,
                    angle_cache_dir().c_str());
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QSVT statevector solver for the periodic advection-diffusion equation"};
    app.set_version_flag("--version", kVersion);
    if (const char* env = std::getenv("QADV_ANGLE_CACHE")) set_angle_cache_dir(env);

    std::string config_path;
    bool dry_run = false;
    auto* solve_cmd = app.add_subcommand("solve", "run one configured instance");
    solve_cmd->add_option("--config", config_path, "JSON configuration file")->required();
    solve_cmd->add_flag("--dry-run", dry_run, "plan only: print degrees, qubits, predicted success");

    int table_id = 0;
    std::string rows_arg, out_dir = ".";
    auto* bench_cmd = app.add_subcommand("bench", "reproduce a benchmark table");
    bench_cmd->add_option("--table", table_id, "table number 1..6")->required();
    bench_cmd->add_option("--rows", rows_arg, "comma-separated row indices (default: all)");
    bench_cmd->add_option("--out-dir", out_dir, "directory for the CSV output");

    int degree_cap = 1000;
    double tol = 1e-9;
    std::string cache_dir_arg;
    auto* angles_cmd = app.add_subcommand("angles", "pre-solve benchmark angle sequences into the cache");
    angles_cmd->add_option("--degree-cap", degree_cap, "skip sequences above this degree");
    angles_cmd->add_option("--tol", tol, "solver tolerance");
    angles_cmd->add_option("--cache-dir", cache_dir_arg, "cache directory (overrides QADV_ANGLE_CACHE)");

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    if (!cache_dir_arg.empty()) set_angle_cache_dir(cache_dir_arg);
    if (solve_cmd->parsed()) return cmd_solve(config_path, dry_run);
    if (bench_cmd->parsed()) return cmd_bench(table_id, rows_arg, out_dir);
    if (angles_cmd->parsed()) return cmd_angles(degree_cap, tol);
    return 2;
}
