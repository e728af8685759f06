#include "hypstab/state.hpp"

#include <cmath>
#include <numbers>

#include "hypstab/errors.hpp"

namespace hypstab {

const char* to_string(InitialData v) {
    switch (v) {
        case InitialData::ModelDefault: return "model-default";
        case InitialData::Constant: return "constant";
        case InitialData::Perturbed: return "perturbed";
    }
    return "?";
}

namespace {

void fill_wave(StateField& s, const Discretization& d, bool perturbed) {
    const double pi = std::numbers::pi;
    for (int j = 1; j <= d.num_cells; ++j) {
        const double bump = perturbed ? std::sin(2.0 * pi * d.cell_center(j)) / (4.0 * pi) : 0.0;
        s.u_plus[j] = -0.5 + bump;
        s.u_minus[j] = 0.5 + bump;
    }
}

void fill_euler(StateField& s, const Discretization& d) {
    for (int j = 1; j <= d.num_cells; ++j) {
        const double decay = std::exp(-d.cell_center(j));
        s.u_plus[j] = 0.8 * decay - 3.0;
        s.u_minus[j] = -1.2 * decay + 3.0;
    }
}

void fill_saint_venant(StateField& s, const Discretization& d) {
    // The reference profile is stated with the 3-decimal speeds; it is kept
    // verbatim (and is therefore not centred at the steady state).
    const double pi = std::numbers::pi;
    for (int j = 1; j <= d.num_cells; ++j) {
        const double height = 4.0 + 0.5 * std::sin(pi * d.cell_center(j));
        s.u_plus[j] = 10.0 + 3.761 * height;
        s.u_minus[j] = 10.0 - 8.761 * height;
    }
}

void subtract_interior_mean(std::vector<double>& u, int num_cells) {
    double sum = 0.0;
    for (int j = 1; j <= num_cells; ++j) sum += u[j];
    const double mean = sum / num_cells;
    for (int j = 1; j <= num_cells; ++j) u[j] -= mean;
}

}  // namespace

StateField initial_data(const Model& model, const Discretization& d, InitialData variant,
                        bool center_data) {
    StateField s(d.num_cells);
    if (model.label == "wave") {
        fill_wave(s, d, variant == InitialData::Perturbed);
    } else {
        if (variant != InitialData::ModelDefault)
            throw ConfigError(std::string("initial variant '") + to_string(variant) +
                              "' is only defined for the wave model");
        if (model.label == "euler")
            fill_euler(s, d);
        else
            fill_saint_venant(s, d);
    }
    if (center_data) {
        subtract_interior_mean(s.u_plus, d.num_cells);
        subtract_interior_mean(s.u_minus, d.num_cells);
    }
    return s;
}

}  // namespace hypstab
