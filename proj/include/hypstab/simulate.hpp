#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypstab/boundary.hpp"
#include "hypstab/grid.hpp"
#include "hypstab/lyapunov.hpp"
#include "hypstab/state.hpp"
#include "hypstab/stepper.hpp"

namespace hypstab {

struct SeriesMeta {
    std::string model;
    int num_cells = 0;
    double dx = 0.0;
    double dt = 0.0;
    double cfl = 0.0;
    double mu = 0.0;
    std::string initial;
    Scheme scheme = Scheme::ViscousUpwind;
};

// Time series of the discrete Lyapunov function along one run, recorded every
// step, together with the squared discrete L2 norm on the same stamps.
struct LyapunovSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<double> norm_sq;
    SeriesMeta meta;

    std::size_t size() const { return times.size(); }
};

struct Snapshot {
    std::int64_t step = 0;
    double time = 0.0;
    std::vector<double> u_plus;   // interior cells 1..J
    std::vector<double> u_minus;
};

struct SimulateOptions {
    double final_time = 12.0;
    double tolerance = 1e-7;         // stop once L^n drops below this
    Scheme scheme = Scheme::ViscousUpwind;
    std::int64_t snapshot_every = 0;  // 0: no snapshots
    double divergence_factor = 1e6;   // L^n above this multiple of L^0 aborts
};

struct SimulationResult {
    LyapunovSeries series;
    std::vector<Snapshot> snapshots;
    bool stopped_on_tolerance = false;
    StateField final_state;
};

// Advances u0 until the first t^n >= final_time or L^n < tolerance, whichever
// comes first. Throws NumericalError on boundary-closure failure or when
// L^n exceeds divergence_factor * L^0.
SimulationResult simulate(const Model& model, const Discretization& d,
                          const FeedbackMatrix& k, const StateField& u0,
                          const SimulateOptions& opt);

}  // namespace hypstab
