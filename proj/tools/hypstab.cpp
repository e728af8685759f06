#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hypstab/csv.hpp"
#include "hypstab/errors.hpp"
#include "hypstab/harness.hpp"

namespace {

using namespace hypstab;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitNumericalError = 2;

struct Flags {
    std::optional<std::string> model;
    std::optional<std::string> cells;   // comma list
    std::optional<double> cfl;
    std::optional<std::string> mu;      // comma list
    std::optional<double> final_time;
    std::optional<double> tolerance;
    std::optional<std::string> scheme;
    std::optional<std::string> initial;
    std::optional<std::string> out_dir;
    std::optional<std::string> config_file;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--model", f.model, "wave | euler | saint-venant");
    cmd->add_option("--J", f.cells, "cell count, or comma list for refinement studies");
    cmd->add_option("--cfl", f.cfl, "Courant number in (0,1]");
    cmd->add_option("--mu", f.mu, "Lyapunov weight parameter, or comma list for sweeps");
    cmd->add_option("--T", f.final_time, "final time");
    cmd->add_option("--tol", f.tolerance, "stopping tolerance on L^n");
    cmd->add_option("--scheme", f.scheme, "plain | viscous");
    cmd->add_option("--initial", f.initial, "constant | perturbed | model-default");
    cmd->add_option("--out", f.out_dir, "output directory");
    cmd->add_option("--config", f.config_file, "key = value config file; flags override it");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// File config first, then flag overrides, expressed as extra config lines so
// one code path validates everything.
ExperimentConfig resolve_config(const Flags& f) {
    std::string text;
    if (f.config_file) text = read_file(*f.config_file);
    std::ostringstream extra;
    if (f.model) extra << "model = " << *f.model << "\n";
    if (f.cells) extra << "J = " << *f.cells << "\n";
    if (f.cfl) extra << "cfl = " << *f.cfl << "\n";
    if (f.mu) extra << "mu = " << *f.mu << "\n";
    if (f.final_time) extra << "T = " << *f.final_time << "\n";
    if (f.tolerance) extra << "tol = " << *f.tolerance << "\n";
    if (f.scheme) extra << "scheme = " << *f.scheme << "\n";
    if (f.initial) extra << "initial = " << *f.initial << "\n";
    if (f.out_dir) extra << "out = " << *f.out_dir << "\n";
    return parse_config(text + extra.str());
}

std::string rate_line(const CaseResult& c) {
    std::ostringstream line;
    line << "J=" << c.series.meta.num_cells << " mu=" << c.series.meta.mu
         << " alpha_mu=" << format_number(c.rates.alpha_mu)
         << " eta_T=" << format_number(c.rates.eta_t)
         << " eta_N=" << format_number(c.rates.eta_n)
         << " mu_feasible=" << (c.rates.mu_feasible ? "true" : "false");
    return line.str();
}

class Timer {
 public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

 private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

void finish(const ExperimentConfig& cfg, std::vector<std::string> files,
            std::vector<std::string> rate_lines, const Timer& timer) {
    RunManifest manifest;
    manifest.config = cfg;
    manifest.files = std::move(files);
    manifest.rate_lines = std::move(rate_lines);
    manifest.wall_seconds = timer.seconds();
    write_manifest(cfg.out_dir + "/manifest.txt", manifest);
}

int cmd_simulate(const Flags& f) {
    const Timer timer;
    const ExperimentConfig cfg = resolve_config(f);
    if (cfg.cell_counts.size() != 1 || cfg.mu_values.size() != 1)
        throw ConfigError("simulate expects a single J and a single mu");

    const CaseResult c = run_case(cfg, cfg.cell_counts.front(), cfg.mu_values.front());
    ensure_directory(cfg.out_dir);
    std::vector<std::string> files;
    const std::string series_path = cfg.out_dir + "/series_" + c.case_key() + ".csv";
    write_series_csv(series_path, c);
    files.push_back(series_path);
    for (auto& snap : write_snapshots(cfg.out_dir, c.case_key(), c, cfg.snapshot_mode))
        files.push_back(snap);

    std::cout << "wrote " << series_path << " (" << c.series.size() << " steps)\n"
              << rate_line(c) << "\n";
    finish(cfg, std::move(files), {rate_line(c)}, timer);
    return kExitOk;
}

int cmd_converge(const Flags& f) {
    const Timer timer;
    const ExperimentConfig cfg = resolve_config(f);
    const ConvergenceReport report = convergence_study(cfg);

    ensure_directory(cfg.out_dir);
    const std::string csv_path = cfg.out_dir + "/convergence.csv";
    const std::string txt_path = cfg.out_dir + "/report.txt";
    write_table_csv(csv_path, report, true);
    write_report_txt(txt_path, report);
    std::cout << "wrote " << csv_path << "\n";
    finish(cfg, {csv_path, txt_path}, {}, timer);
    return kExitOk;
}

int cmd_table(int table_id, const Flags& f) {
    const Timer timer;
    ExperimentConfig cfg = table_config(table_id);
    if (f.out_dir) cfg.out_dir = *f.out_dir;

    const ConvergenceReport report = reproduce_table(table_id);
    ensure_directory(cfg.out_dir);
    const std::string csv_path = cfg.out_dir + "/table" + std::to_string(table_id) + ".csv";
    const std::string txt_path =
        cfg.out_dir + "/table" + std::to_string(table_id) + "_report.txt";
    write_table_csv(csv_path, report, table_id <= 2);
    write_report_txt(txt_path, report);
    std::cout << "wrote " << csv_path << " (" << report.rows.size() << " rows)\n";
    finish(cfg, {csv_path, txt_path}, {}, timer);
    return kExitOk;
}

int cmd_sweep(const Flags& f) {
    const Timer timer;
    const ExperimentConfig cfg = resolve_config(f);
    const SweepResult sweep = mu_sweep(cfg);

    ensure_directory(cfg.out_dir);
    const std::string path = cfg.out_dir + "/sweep_" + cfg.model + ".csv";
    write_sweep_csv(path, sweep);

    std::vector<std::string> rates;
    for (const auto& c : sweep.cases) rates.push_back(rate_line(c));
    std::cout << "wrote " << path << " (" << sweep.cases.size() << " series)\n";
    finish(cfg, {path}, std::move(rates), timer);
    return kExitOk;
}

int cmd_check_k(const Flags& f, bool continuous) {
    const ExperimentConfig cfg = resolve_config(f);
    const Model model = cfg.resolve_model();
    const double mu = cfg.mu_values.front();
    const Discretization grid =
        build_discretization(model.spec, cfg.cell_counts.front(), cfg.cfl, mu);
    const ViscosityCoeffs visc = diffusion_coefficients(model.spec, grid);
    const FeedbackMatrix k = FeedbackMatrix::damping(mu);

    const ConditionReport report =
        continuous ? verify_continuous_k_conditions(k, model.spec, visc.max(), mu)
                   : verify_k_conditions(k, model.spec, grid, visc);

    std::cout << (continuous ? "continuous" : "discrete")
              << " feedback conditions for K = diag(e^{-mu/2}), model=" << cfg.model
              << " J=" << grid.num_cells << " cfl=" << grid.cfl << " mu=" << mu << "\n";
    for (const auto& c : report.conditions)
        std::cout << "  " << c.id << ": residual=" << format_number(c.residual) << "  "
                  << (c.pass ? "pass" : "FAIL") << "\n";

    if (f.out_dir) {
        ensure_directory(*f.out_dir);
        write_conditions_csv(*f.out_dir + "/kconditions.csv", report);
        std::cout << "wrote " << *f.out_dir << "/kconditions.csv\n";
    }
    // condition failures are report content, not process failures
    return kExitOk;
}

int cmd_rates(const Flags& f) {
    const ExperimentConfig cfg = resolve_config(f);
    const Model model = cfg.resolve_model();
    for (double mu : cfg.mu_values)
        for (int J : cfg.cell_counts) {
            const Discretization grid = build_discretization(model.spec, J, cfg.cfl, mu);
            const ViscosityCoeffs visc = diffusion_coefficients(model.spec, grid);
            const DecayRates r = decay_rates(model.spec, grid, visc);
            std::printf("model=%s J=%d cfl=%g mu=%g  alpha_mu=%.4f eta_T=%.4f eta_N=%.4f"
                        "  (full: %.12e %.12e %.12e)  mu_feasible=%s\n",
                        cfg.model.c_str(), J, cfg.cfl, mu, r.alpha_mu, r.eta_t, r.eta_n,
                        r.alpha_mu, r.eta_t, r.eta_n, r.mu_feasible ? "true" : "false");
        }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-feedback stabilisation lab for 2x2 linear hyperbolic systems:\n"
                 "upwind / viscous-upwind schemes, discrete Lyapunov diagnostics, decay-rate\n"
                 "tables and mu sweeps."};
    app.require_subcommand(1);

    Flags flags;
    int table_id = 1;
    bool continuous = false;

    CLI::App* simulate = app.add_subcommand("simulate", "run one case, export L series");
    add_common_flags(simulate, flags);

    CLI::App* converge = app.add_subcommand("converge", "grid refinement study over a J list");
    add_common_flags(converge, flags);

    CLI::App* table = app.add_subcommand("table", "reproduce one of the reference tables 1-4");
    table->add_option("id", table_id, "table number (1-4)")->required();
    add_common_flags(table, flags);

    CLI::App* sweep = app.add_subcommand("sweep", "one L series per mu in the mu list");
    add_common_flags(sweep, flags);

    CLI::App* check_k = app.add_subcommand("check-k", "verify the feedback-matrix conditions");
    check_k->add_flag("--continuous", continuous,
                      "check the continuous-system conditions instead of the discrete ones");
    add_common_flags(check_k, flags);

    CLI::App* rates = app.add_subcommand("rates", "print alpha*mu, eta_T, eta_N for a config");
    add_common_flags(rates, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(flags);
        if (converge->parsed()) return cmd_converge(flags);
        if (table->parsed()) return cmd_table(table_id, flags);
        if (sweep->parsed()) return cmd_sweep(flags);
        if (check_k->parsed()) return cmd_check_k(flags, continuous);
        if (rates->parsed()) return cmd_rates(flags);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitOk;
}
