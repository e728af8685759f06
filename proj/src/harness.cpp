#include "hypstab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hypstab/errors.hpp"

namespace hypstab {

int harness_thread_cap() {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap <= 0) cap = 1;
#ifdef _OPENMP
    cap = std::min(cap, omp_get_max_threads());
#endif
    if (const char* env = std::getenv("HYPSTAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) cap = std::min<long>(cap, v);
    }
    return cap;
}

std::string CaseResult::case_key() const {
    std::ostringstream key;
    key << series.meta.model << "_J" << series.meta.num_cells << "_cfl" << series.meta.cfl
        << "_mu" << series.meta.mu << "_" << series.meta.initial << "_"
        << to_string(series.meta.scheme);
    std::string s = key.str();
    std::replace(s.begin(), s.end(), '.', 'p');
    return s;
}

CaseResult run_case(const ExperimentConfig& cfg, int num_cells, double mu) {
    const Model model = cfg.resolve_model();
    const Discretization grid = build_discretization(model.spec, num_cells, cfg.cfl, mu);
    const FeedbackMatrix k = FeedbackMatrix::damping(mu);
    const StateField u0 = initial_data(model, grid, cfg.initial, cfg.center_initial_data);

    SimulateOptions opt;
    opt.final_time = cfg.final_time;
    opt.tolerance = cfg.tolerance;
    opt.scheme = cfg.scheme;
    opt.snapshot_every = cfg.snapshot_every;

    SimulationResult sim = simulate(model, grid, k, u0, opt);
    sim.series.meta.initial = to_string(cfg.initial);

    CaseResult out;
    out.grid = grid;
    out.viscosity = diffusion_coefficients(model.spec, grid);
    out.rates = decay_rates(model.spec, grid, out.viscosity);
    out.series = std::move(sim.series);
    out.snapshots = std::move(sim.snapshots);

    const double l0 = out.series.values.front();
    out.up_alpha_mu = upper_bound_series(l0, out.rates.alpha_mu, out.series.times);
    out.up_eta_t = upper_bound_series(l0, out.rates.eta_t, out.series.times);
    out.up_eta_n = upper_bound_series(l0, out.rates.eta_n, out.series.times);
    return out;
}

std::pair<double, double> diff_norms(const LyapunovSeries& series,
                                     std::span<const double> bound,
                                     SeriesPairing pairing) {
    if (series.size() != bound.size())
        throw ConfigError("diff_norms: series lengths differ (" +
                          std::to_string(series.size()) + " vs " +
                          std::to_string(bound.size()) + ")");
    const std::size_t offset = pairing == SeriesPairing::PostStep ? 1 : 0;
    if (series.size() < offset + 1) return {0.0, 0.0};
    double sup = 0.0;
    double sum_sq = 0.0;
    for (std::size_t n = 0; n + offset < series.size(); ++n) {
        const double diff = std::abs(bound[n] - series.values[n + offset]);
        sup = std::max(sup, diff);
        sum_sq += diff * diff;
    }
    return {sup, std::sqrt(series.meta.dt * sum_sq)};
}

namespace {

bool dt_halves(double coarse, double fine) {
    return std::abs(fine - 0.5 * coarse) <= 1e-9 * coarse;
}

}  // namespace

RateValue refinement_rate(const LyapunovSeries& coarse, const LyapunovSeries& mid,
                          const LyapunovSeries& fine, SeriesPairing pairing) {
    if (mid.meta.num_cells != 2 * coarse.meta.num_cells ||
        fine.meta.num_cells != 2 * mid.meta.num_cells)
        throw ConfigError("refinement_rate: grids must double (J, 2J, 4J)");
    if (!dt_halves(coarse.meta.dt, mid.meta.dt) || !dt_halves(mid.meta.dt, fine.meta.dt))
        throw ConfigError("refinement_rate: time grids are misaligned (dt must halve "
                          "with each refinement)");

    // Common stamps: coarse step n pairs with mid step 2n and fine step 4n;
    // PostStep starts each run at its first post-step sample.
    const std::size_t s = pairing == SeriesPairing::PostStep ? 1 : 0;
    if (coarse.size() < s + 1 || mid.size() < s + 1 || fine.size() < s + 1)
        return {};
    const std::size_t count = std::min({coarse.size() - s, (mid.size() - 1 - s) / 2 + 1,
                                        (fine.size() - 1 - s) / 4 + 1});

    double num = 0.0;
    double den = 0.0;
    for (std::size_t n = 0; n < count; ++n) {
        const double d1 = coarse.values[n + s] - mid.values[2 * n + s];
        const double d2 = mid.values[2 * n + s] - fine.values[4 * n + s];
        num += d1 * d1;
        den += d2 * d2;
    }
    RateValue r;
    if (den > 0.0) {
        r.value = std::sqrt(num / den);
        r.defined = true;
    }
    return r;
}

namespace {

// Runs one case per J in `counts` (fixed mu), in parallel across cases.
std::map<int, CaseResult> run_refinements(const ExperimentConfig& cfg,
                                          const std::vector<int>& counts, double mu) {
    std::vector<CaseResult> slots(counts.size());
    std::vector<std::string> errors(counts.size());
    const int n = static_cast<int>(counts.size());
    const int threads = std::min(harness_thread_cap(), n);
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (int i = 0; i < n; ++i) {
        try {
            slots[i] = run_case(cfg, counts[i], mu);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw NumericalError(e);

    std::map<int, CaseResult> by_count;
    for (int i = 0; i < n; ++i) by_count.emplace(counts[i], std::move(slots[i]));
    return by_count;
}

ReportRow make_row(double key, const CaseResult& c) {
    const auto [sup, l2] = diff_norms(c.series, c.up_eta_n, SeriesPairing::PostStep);
    ReportRow row;
    row.key = key;
    row.sup_diff = sup;
    row.l2_diff = l2;
    row.alpha_mu = c.rates.alpha_mu;
    row.eta_t = c.rates.eta_t;
    row.eta_n = c.rates.eta_n;
    return row;
}

}  // namespace

ConvergenceReport convergence_study(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const double mu = cfg.mu_values.front();

    std::map<int, CaseResult> cases = run_refinements(cfg, cfg.cell_counts, mu);

    ConvergenceReport report;
    report.key_name = "J";
    for (int J : cfg.cell_counts) {
        ReportRow row = make_row(J, cases.at(J));
        const auto mid = cases.find(2 * J);
        const auto fine = cases.find(4 * J);
        if (mid != cases.end() && fine != cases.end())
            row.rate = refinement_rate(cases.at(J).series, mid->second.series,
                                       fine->second.series, SeriesPairing::PostStep);
        report.rows.push_back(row);
    }
    return report;
}

ExperimentConfig table_config(int table_id) {
    ExperimentConfig cfg;
    cfg.model = "wave";
    cfg.scheme = Scheme::ViscousUpwind;
    cfg.tolerance = 1e-7;
    switch (table_id) {
        case 1:
            cfg.cell_counts = {100, 200, 400, 800, 1600};
            cfg.cfl = 0.95;
            cfg.mu_values = {0.5};
            cfg.final_time = 12.0;
            cfg.initial = InitialData::Constant;
            break;
        case 2:
            cfg.cell_counts = {100, 200, 400, 800, 1600};
            cfg.cfl = 0.5;
            cfg.mu_values = {0.5};
            cfg.final_time = 12.0;
            cfg.initial = InitialData::Constant;
            break;
        case 3:
        case 4:
            cfg.cell_counts = {1600};
            cfg.cfl = 0.95;
            cfg.mu_values = {0.25, 0.5, 1.25, 2.75, 4.5};
            cfg.final_time = 35.0;
            cfg.initial = table_id == 3 ? InitialData::Constant : InitialData::Perturbed;
            break;
        default:
            throw ConfigError("table id must be 1..4, got " + std::to_string(table_id));
    }
    return cfg;
}

ConvergenceReport reproduce_table(int table_id) {
    const ExperimentConfig cfg = table_config(table_id);

    if (table_id <= 2) {
        // Every row carries a rate, so the run set extends to 4x the finest row.
        std::vector<int> counts = cfg.cell_counts;
        counts.push_back(2 * counts.back());
        counts.push_back(2 * counts.back());
        std::map<int, CaseResult> cases = run_refinements(cfg, counts, cfg.mu_values.front());

        ConvergenceReport report;
        report.key_name = "J";
        for (int J : cfg.cell_counts) {
            ReportRow row = make_row(J, cases.at(J));
            row.rate = refinement_rate(cases.at(J).series, cases.at(2 * J).series,
                                       cases.at(4 * J).series, SeriesPairing::PostStep);
            report.rows.push_back(row);
        }
        return report;
    }

    // mu sweep tables
    SweepResult sweep = mu_sweep(cfg);
    ConvergenceReport report;
    report.key_name = "mu";
    for (std::size_t i = 0; i < sweep.cases.size(); ++i)
        report.rows.push_back(make_row(cfg.mu_values[i], sweep.cases[i]));
    return report;
}

SweepResult mu_sweep(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const int J = cfg.cell_counts.front();
    const int n = static_cast<int>(cfg.mu_values.size());

    SweepResult sweep;
    sweep.cases.resize(cfg.mu_values.size());
    std::vector<std::string> errors(cfg.mu_values.size());
    const int threads = std::min(harness_thread_cap(), n);
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (int i = 0; i < n; ++i) {
        try {
            sweep.cases[i] = run_case(cfg, J, cfg.mu_values[i]);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw NumericalError(e);
    return sweep;
}

}  // namespace hypstab
