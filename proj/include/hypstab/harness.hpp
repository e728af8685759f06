#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypstab/config.hpp"
#include "hypstab/lyapunov.hpp"
#include "hypstab/simulate.hpp"

namespace hypstab {

// One simulation plus the three exponential upper bounds evaluated on its
// time stamps, all sharing L^0.
struct CaseResult {
    LyapunovSeries series;
    std::vector<double> up_alpha_mu;
    std::vector<double> up_eta_t;
    std::vector<double> up_eta_n;
    DecayRates rates;
    ViscosityCoeffs viscosity;
    Discretization grid;
    std::vector<Snapshot> snapshots;

    std::string case_key() const;  // stable identifier used in file names
};

CaseResult run_case(const ExperimentConfig& cfg, int num_cells, double mu);

// How a comparison pairs its samples with the L series. The reference studies
// were recorded with the post-step convention: the Lyapunov value computed
// after a step is listed against the stamp of the step's start, so their
// difference columns pair bound(t^n) with L^{n+1}. SameStamp is the plain
// t^n <-> t^n pairing.
enum class SeriesPairing {
    SameStamp,
    PostStep,
};

// sup_n |bound(t^n) - L^{n+s}| and sqrt(dt sum_n |bound(t^n) - L^{n+s}|^2)
// with s = 0 (SameStamp) or 1 (PostStep).
// Throws ConfigError on length mismatch.
std::pair<double, double> diff_norms(const LyapunovSeries& series,
                                     std::span<const double> bound,
                                     SeriesPairing pairing = SeriesPairing::SameStamp);

struct RateValue {
    double value = 0.0;
    bool defined = false;
};

// ||L_J - L_2J|| / ||L_2J - L_4J|| on the coarse run's time stamps, aligning
// coarse step n with fine steps 2n and 4n (dt halves with each refinement, so
// the alignment is exact; no interpolation). PostStep starts the pairing at
// each run's first post-step sample. A 0/0 ratio is undefined.
RateValue refinement_rate(const LyapunovSeries& coarse, const LyapunovSeries& mid,
                          const LyapunovSeries& fine,
                          SeriesPairing pairing = SeriesPairing::SameStamp);

struct ReportRow {
    double key = 0.0;  // J for refinement tables, mu for sweep tables
    double sup_diff = 0.0;
    double l2_diff = 0.0;
    double alpha_mu = 0.0;
    double eta_t = 0.0;
    double eta_n = 0.0;
    RateValue rate;
};

struct ConvergenceReport {
    std::string key_name;  // "J" or "mu"
    std::vector<ReportRow> rows;
};

// Refinement study over cfg.cell_counts (single mu), using the reference
// studies' post-step pairing. Rates are attached to rows that have both the
// doubled and quadrupled grid in the list.
ConvergenceReport convergence_study(const ExperimentConfig& cfg);

// The four reference studies:
//   1: wave, J = 100..1600, CFL 0.95, mu 0.5, T 12 (constant data)
//   2: same with CFL 0.5
//   3: wave, J = 1600, CFL 0.95, T 35, mu in {0.25, 0.5, 1.25, 2.75, 4.5}, constant
//   4: same with perturbed data
// Tables 1-2 internally extend the grid list to 4x the finest row so every
// row carries a rate.
ConvergenceReport reproduce_table(int table_id);

// The per-table parameter sets above, exposed so callers can re-run rows.
ExperimentConfig table_config(int table_id);

struct SweepResult {
    std::vector<CaseResult> cases;  // one per mu, in mu order
};

// One series per mu in cfg.mu_values on a common grid (first cell count).
SweepResult mu_sweep(const ExperimentConfig& cfg);

// Worker cap for independent cases: min(hardware, HYPSTAB_THREADS if set).
int harness_thread_cap();

}  // namespace hypstab
