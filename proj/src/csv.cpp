#include "hypstab/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hypstab/errors.hpp"

namespace hypstab {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

void ensure_directory(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no platform newline translation
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    return out;
}

std::string format_round(double v, int decimals) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace

void write_series_csv(const std::string& path, const CaseResult& c) {
    std::ofstream out = open_out(path);
    out << "t,L,L_up_alpha_mu,L_up_eta_T,L_up_eta_N\n";
    for (std::size_t n = 0; n < c.series.size(); ++n) {
        out << format_number(c.series.times[n]) << ',' << format_number(c.series.values[n])
            << ',' << format_number(c.up_alpha_mu[n]) << ',' << format_number(c.up_eta_t[n])
            << ',' << format_number(c.up_eta_n[n]) << '\n';
    }
}

void write_table_csv(const std::string& path, const ConvergenceReport& report,
                     bool with_rate) {
    std::ofstream out = open_out(path);
    out << report.key_name << ",sup_diff,l2_diff,alpha_mu,eta_T,eta_N";
    if (with_rate) out << ",rate";
    out << '\n';
    for (const auto& row : report.rows) {
        if (report.key_name == "J")
            out << static_cast<long>(row.key);
        else
            out << format_number(row.key);
        out << ',' << format_number(row.sup_diff) << ',' << format_number(row.l2_diff) << ','
            << format_number(row.alpha_mu) << ',' << format_number(row.eta_t) << ','
            << format_number(row.eta_n);
        if (with_rate) {
            out << ',';
            if (row.rate.defined)
                out << format_number(row.rate.value);
            else
                out << "undefined";
        }
        out << '\n';
    }
}

void write_sweep_csv(const std::string& path, const SweepResult& sweep) {
    std::ofstream out = open_out(path);
    out << "mu,t,L\n";
    for (const auto& c : sweep.cases)
        for (std::size_t n = 0; n < c.series.size(); ++n)
            out << format_number(c.series.meta.mu) << ',' << format_number(c.series.times[n])
                << ',' << format_number(c.series.values[n]) << '\n';
}

void write_conditions_csv(const std::string& path, const ConditionReport& report) {
    std::ofstream out = open_out(path);
    out << "condition,lhs11,lhs12,lhs21,lhs22,rhs11,rhs12,rhs21,rhs22,residual,pass\n";
    for (const auto& c : report.conditions) {
        out << c.id << ',' << format_number(c.lhs.m11) << ',' << format_number(c.lhs.m12)
            << ',' << format_number(c.lhs.m21) << ',' << format_number(c.lhs.m22) << ','
            << format_number(c.rhs.m11) << ',' << format_number(c.rhs.m12) << ','
            << format_number(c.rhs.m21) << ',' << format_number(c.rhs.m22) << ','
            << format_number(c.residual) << ',' << (c.pass ? "true" : "false") << '\n';
    }
}

std::vector<std::string> write_snapshots(const std::string& dir, const std::string& case_key,
                                         const CaseResult& c, const std::string& mode) {
    std::vector<std::string> files;
    if (c.snapshots.empty()) return files;

    const double dx = c.grid.dx;
    if (mode == "files") {
        for (const auto& snap : c.snapshots) {
            const std::string path =
                dir + "/snapshot_" + case_key + "_" + std::to_string(snap.step) + ".csv";
            std::ofstream out = open_out(path);
            out << "t,x,u_plus,u_minus\n";
            for (std::size_t i = 0; i < snap.u_plus.size(); ++i) {
                const double x = (static_cast<double>(i) + 0.5) * dx;
                out << format_number(snap.time) << ',' << format_number(x) << ','
                    << format_number(snap.u_plus[i]) << ',' << format_number(snap.u_minus[i])
                    << '\n';
            }
            files.push_back(path);
        }
        return files;
    }

    const std::string path = dir + "/snapshots_" + case_key + ".csv";
    std::ofstream out = open_out(path);
    out << "t,x,u_plus,u_minus\n";
    for (const auto& snap : c.snapshots)
        for (std::size_t i = 0; i < snap.u_plus.size(); ++i) {
            const double x = (static_cast<double>(i) + 0.5) * dx;
            out << format_number(snap.time) << ',' << format_number(x) << ','
                << format_number(snap.u_plus[i]) << ',' << format_number(snap.u_minus[i])
                << '\n';
        }
    files.push_back(path);
    return files;
}

void write_report_txt(const std::string& path, const ConvergenceReport& report) {
    std::ofstream out = open_out(path);
    out << report.key_name << "     sup_diff     l2_diff      alpha_mu  eta_T   eta_N";
    const bool any_rate =
        std::any_of(report.rows.begin(), report.rows.end(),
                    [](const ReportRow& r) { return r.rate.defined; });
    if (any_rate) out << "   rate";
    out << '\n';
    for (const auto& row : report.rows) {
        if (report.key_name == "J")
            out << static_cast<long>(row.key);
        else
            out << format_round(row.key, 2);
        out << "  " << format_number(row.sup_diff) << "  " << format_number(row.l2_diff)
            << "  " << format_round(row.alpha_mu, 4) << "  " << format_round(row.eta_t, 4)
            << "  " << format_round(row.eta_n, 4);
        if (row.rate.defined) out << "  " << format_round(row.rate.value, 4);
        out << '\n';
    }
}

void write_manifest(const std::string& path, const RunManifest& m) {
    std::ofstream out = open_out(path);
    out << "# run manifest: resolved configuration follows; '#' lines are metadata\n";
    out << "# wall_seconds: " << format_number(m.wall_seconds) << '\n';
    out << "# files:\n";
    for (const auto& f : m.files) out << "#   " << f << '\n';
    if (!m.rate_lines.empty()) {
        out << "# decay rates:\n";
        for (const auto& r : m.rate_lines) out << "#   " << r << '\n';
    }
    out << echo_config(m.config);
}

}  // namespace hypstab
