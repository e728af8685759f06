#pragma once

#include <string>
#include <vector>

#include "hypstab/config.hpp"
#include "hypstab/harness.hpp"
#include "hypstab/lyapunov.hpp"

namespace hypstab {

// All CSV output: UTF-8, comma separated, one header row, scientific notation
// with 12 significant digits. Formatting is locale-independent so identical
// inputs produce byte-identical files.
std::string format_number(double v);

void ensure_directory(const std::string& dir);

// t,L,L_up_alpha_mu,L_up_eta_T,L_up_eta_N
void write_series_csv(const std::string& path, const CaseResult& c);

// key,sup_diff,l2_diff,alpha_mu,eta_T,eta_N[,rate]
void write_table_csv(const std::string& path, const ConvergenceReport& report,
                     bool with_rate);

// mu,t,L (long format)
void write_sweep_csv(const std::string& path, const SweepResult& sweep);

// condition,lhs11,lhs12,lhs21,lhs22,rhs11,rhs12,rhs21,rhs22,residual,pass
void write_conditions_csv(const std::string& path, const ConditionReport& report);

// t,x,u_plus,u_minus; either one long file or one file per snapshot.
std::vector<std::string> write_snapshots(const std::string& dir, const std::string& case_key,
                                         const CaseResult& c, const std::string& mode);

// Human-readable summary with values rounded to the printed precision of the
// reference studies.
void write_report_txt(const std::string& path, const ConvergenceReport& report);

// Run manifest: resolved config echo plus '#' comment lines listing produced
// files, wall-clock duration and per-case decay rates. parse_config reads it
// back unchanged.
struct RunManifest {
    ExperimentConfig config;
    std::vector<std::string> files;
    double wall_seconds = 0.0;
    std::vector<std::string> rate_lines;
};

void write_manifest(const std::string& path, const RunManifest& m);

}  // namespace hypstab
