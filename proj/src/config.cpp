#include "hypstab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypstab/errors.hpp"
#include "hypstab/grid.hpp"

namespace hypstab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_line(int line_no, const std::string& line, const std::string& why) {
    throw ConfigError("config line " + std::to_string(line_no) + " ('" + line + "'): " + why);
}

double parse_double(const std::string& v, int line_no, const std::string& line) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) fail_line(line_no, line, "unparsable number '" + v + "'");
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail_line(line_no, line, "unparsable number '" + v + "'");
    }
}

long parse_long(const std::string& v, int line_no, const std::string& line) {
    long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        fail_line(line_no, line, "unparsable integer '" + v + "'");
    return out;
}

bool parse_bool(const std::string& v, int line_no, const std::string& line) {
    if (v == "true") return true;
    if (v == "false") return false;
    fail_line(line_no, line, "expected true or false, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> parts;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(trim(item));
    return parts;
}

}  // namespace

Model ExperimentConfig::resolve_model() const {
    Model base = make_model(model);
    SteadyState steady = base.steady;
    if (q_star) steady.flux_star = *q_star;
    if (rho_star) steady.primary_star = *rho_star;
    if (h_star) steady.primary_star = *h_star;
    if (sound_speed) steady.parameter = *sound_speed;
    if (gravity) steady.parameter = *gravity;
    return make_model(model, steady);
}

void validate_config(const ExperimentConfig& c) {
    if (c.cell_counts.empty()) throw ConfigError("J list must not be empty");
    for (int J : c.cell_counts)
        if (J < 2) throw ConfigError("J = " + std::to_string(J) + ": at least 2 cells required");
    for (std::size_t i = 1; i < c.cell_counts.size(); ++i)
        if (c.cell_counts[i] != 2 * c.cell_counts[i - 1])
            throw ConfigError("J list must be dyadic (each entry double the last); got " +
                              std::to_string(c.cell_counts[i - 1]) + " followed by " +
                              std::to_string(c.cell_counts[i]));
    if (!(c.cfl > 0.0 && c.cfl <= 1.0))
        throw ConfigError("cfl = " + std::to_string(c.cfl) +
                          " violates the CFL stability condition max{a+,|a-|} dt/dx <= 1 "
                          "(required: 0 < cfl <= 1)");
    if (c.mu_values.empty()) throw ConfigError("mu list must not be empty");
    for (double mu : c.mu_values)
        if (!(mu > 0.0)) throw ConfigError("mu must be positive");
    if (!(c.final_time >= 0.0)) throw ConfigError("T must be nonnegative");
    if (!(c.tolerance >= 0.0)) throw ConfigError("tol must be nonnegative");
    if (c.snapshot_every < 0) throw ConfigError("snapshot_every must be nonnegative");
    if (c.snapshot_mode != "long" && c.snapshot_mode != "files")
        throw ConfigError("snapshot_mode must be 'long' or 'files'");

    const bool is_euler = c.model == "euler";
    const bool is_sv = c.model == "saint-venant";
    if (c.q_star && !is_euler && !is_sv)
        throw ConfigError("key q_star is not valid for model " + c.model);
    if (c.rho_star && !is_euler) throw ConfigError("key rho_star is only valid for model euler");
    if (c.sound_speed && !is_euler)
        throw ConfigError("key sound_speed is only valid for model euler");
    if (c.h_star && !is_sv) throw ConfigError("key h_star is only valid for model saint-venant");
    if (c.gravity && !is_sv) throw ConfigError("key gravity is only valid for model saint-venant");
    if (c.initial != InitialData::ModelDefault && c.model != "wave")
        throw ConfigError(std::string("initial = ") + to_string(c.initial) +
                          " is only valid for model wave");

    c.resolve_model();  // validates model label and steady-state admissibility
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig c;
    std::stringstream ss(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(ss, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail_line(line_no, line, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail_line(line_no, line, "empty key");
        if (value.empty()) fail_line(line_no, line, "empty value");

        if (key == "model") {
            c.model = value;
        } else if (key == "J") {
            c.cell_counts.clear();
            for (const auto& item : split_list(value))
                c.cell_counts.push_back(static_cast<int>(parse_long(item, line_no, line)));
        } else if (key == "cfl") {
            c.cfl = parse_double(value, line_no, line);
        } else if (key == "mu") {
            c.mu_values.clear();
            for (const auto& item : split_list(value))
                c.mu_values.push_back(parse_double(item, line_no, line));
        } else if (key == "T") {
            c.final_time = parse_double(value, line_no, line);
        } else if (key == "tol") {
            c.tolerance = parse_double(value, line_no, line);
        } else if (key == "scheme") {
            if (value == "plain")
                c.scheme = Scheme::PlainUpwind;
            else if (value == "viscous")
                c.scheme = Scheme::ViscousUpwind;
            else
                fail_line(line_no, line, "scheme must be 'plain' or 'viscous'");
        } else if (key == "initial") {
            if (value == "model-default")
                c.initial = InitialData::ModelDefault;
            else if (value == "constant")
                c.initial = InitialData::Constant;
            else if (value == "perturbed")
                c.initial = InitialData::Perturbed;
            else
                fail_line(line_no, line, "initial must be constant | perturbed | model-default");
        } else if (key == "out") {
            c.out_dir = value;
        } else if (key == "center_initial_data") {
            c.center_initial_data = parse_bool(value, line_no, line);
        } else if (key == "snapshot_every") {
            c.snapshot_every = parse_long(value, line_no, line);
        } else if (key == "snapshot_mode") {
            c.snapshot_mode = value;
        } else if (key == "q_star") {
            c.q_star = parse_double(value, line_no, line);
        } else if (key == "rho_star") {
            c.rho_star = parse_double(value, line_no, line);
        } else if (key == "sound_speed") {
            c.sound_speed = parse_double(value, line_no, line);
        } else if (key == "h_star") {
            c.h_star = parse_double(value, line_no, line);
        } else if (key == "gravity") {
            c.gravity = parse_double(value, line_no, line);
        } else {
            fail_line(line_no, line, "unknown key '" + key + "'");
        }
    }
    validate_config(c);
    return c;
}

namespace {

std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string echo_config(const ExperimentConfig& c) {
    std::ostringstream out;
    out << "model = " << c.model << "\n";
    out << "J = ";
    for (std::size_t i = 0; i < c.cell_counts.size(); ++i)
        out << (i ? "," : "") << c.cell_counts[i];
    out << "\n";
    out << "cfl = " << full_precision(c.cfl) << "\n";
    out << "mu = ";
    for (std::size_t i = 0; i < c.mu_values.size(); ++i)
        out << (i ? "," : "") << full_precision(c.mu_values[i]);
    out << "\n";
    out << "T = " << full_precision(c.final_time) << "\n";
    out << "tol = " << full_precision(c.tolerance) << "\n";
    out << "scheme = " << to_string(c.scheme) << "\n";
    out << "initial = " << to_string(c.initial) << "\n";
    out << "out = " << c.out_dir << "\n";
    out << "center_initial_data = " << (c.center_initial_data ? "true" : "false") << "\n";
    out << "snapshot_every = " << c.snapshot_every << "\n";
    out << "snapshot_mode = " << c.snapshot_mode << "\n";
    if (c.q_star) out << "q_star = " << full_precision(*c.q_star) << "\n";
    if (c.rho_star) out << "rho_star = " << full_precision(*c.rho_star) << "\n";
    if (c.sound_speed) out << "sound_speed = " << full_precision(*c.sound_speed) << "\n";
    if (c.h_star) out << "h_star = " << full_precision(*c.h_star) << "\n";
    if (c.gravity) out << "gravity = " << full_precision(*c.gravity) << "\n";
    return out.str();
}

}  // namespace hypstab
