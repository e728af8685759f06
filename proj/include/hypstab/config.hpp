#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypstab/model.hpp"
#include "hypstab/simulate.hpp"
#include "hypstab/state.hpp"

namespace hypstab {

// One experiment description. Everything the reference runs need fits in flat
// key = value lines; see parse_config for the accepted keys.
struct ExperimentConfig {
    std::string model = "wave";
    std::vector<int> cell_counts = {100};      // key J; dyadic when more than one
    double cfl = 0.5;
    std::vector<double> mu_values = {0.5};     // key mu
    double final_time = 12.0;                  // key T
    double tolerance = 1e-7;                   // key tol
    Scheme scheme = Scheme::ViscousUpwind;
    InitialData initial = InitialData::ModelDefault;
    std::string out_dir = "results";
    bool center_initial_data = false;
    std::int64_t snapshot_every = 0;
    std::string snapshot_mode = "long";        // "long" | "files"

    // Steady-state overrides; when absent the model's reference values apply.
    std::optional<double> q_star;
    std::optional<double> rho_star;      // euler
    std::optional<double> sound_speed;   // euler
    std::optional<double> h_star;        // saint-venant
    std::optional<double> gravity;       // saint-venant

    Model resolve_model() const;
};

// Parses flat `key = value` text (UTF-8, '#' starts a comment line) into a
// fully resolved config. Unknown keys, unparsable numbers and violated
// invariants (e.g. cfl > 1) are ConfigErrors naming the offending line.
ExperimentConfig parse_config(const std::string& text);

// The config in parse_config syntax; parse_config(echo_config(c)) resolves to c.
std::string echo_config(const ExperimentConfig& c);

// Post-parse validation shared with the CLI flag path.
void validate_config(const ExperimentConfig& c);

}  // namespace hypstab
