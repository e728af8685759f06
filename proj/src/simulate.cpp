#include "hypstab/simulate.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "hypstab/errors.hpp"
#include "hypstab/kernels.hpp"

namespace hypstab {

namespace {

Snapshot take_snapshot(const StateField& s, double time) {
    Snapshot snap;
    snap.step = s.step;
    snap.time = time;
    const int J = s.num_cells();
    snap.u_plus.assign(s.u_plus.begin() + 1, s.u_plus.begin() + 1 + J);
    snap.u_minus.assign(s.u_minus.begin() + 1, s.u_minus.begin() + 1 + J);
    return snap;
}

}  // namespace

SimulationResult simulate(const Model& model, const Discretization& d,
                          const FeedbackMatrix& k, const StateField& u0,
                          const SimulateOptions& opt) {
    if (u0.num_cells() != d.num_cells)
        throw ConfigError("simulate: state has " + std::to_string(u0.num_cells()) +
                          " cells but the grid has " + std::to_string(d.num_cells));
    const LyapunovWeights weights = make_weights(d);
    const ViscosityCoeffs visc = diffusion_coefficients(model.spec, d);
    const kernels::StepCoeffs coeffs =
        step_coefficients(model.spec, d, opt.scheme == Scheme::ViscousUpwind
                                            ? visc
                                            : ViscosityCoeffs{});
    const bool viscous = opt.scheme == Scheme::ViscousUpwind;

    SimulationResult result;
    result.series.meta = {model.label, d.num_cells, d.dx,  d.dt,
                          d.cfl,       d.mu,        "",    opt.scheme};

    StateField cur = u0;
    StateField next(d.num_cells);

    const double l0 = discrete_lyapunov(cur, weights, d);
    result.series.times.push_back(0.0);
    result.series.values.push_back(l0);
    result.series.norm_sq.push_back(discrete_l2_norm_sq(cur, d));
    if (opt.snapshot_every > 0) result.snapshots.push_back(take_snapshot(cur, 0.0));

    if (l0 < opt.tolerance) {
        result.stopped_on_tolerance = true;
        result.final_state = std::move(cur);
        return result;
    }

    const double divergence_limit = opt.divergence_factor * l0;
    double t = 0.0;
    while (t < opt.final_time) {
        if (viscous) {
            close_boundaries(cur, k);
        } else {
            close_boundaries_value_only(cur, k);
            cur.u_plus[d.num_cells + 1] = 0.0;
            cur.u_minus[0] = 0.0;
        }
        kernels::advance_interior(cur, next, coeffs);
        next.step = cur.step + 1;
        std::swap(cur, next);

        t = static_cast<double>(cur.step) * d.dt;
        const double l = discrete_lyapunov(cur, weights, d);
        result.series.times.push_back(t);
        result.series.values.push_back(l);
        result.series.norm_sq.push_back(discrete_l2_norm_sq(cur, d));
        if (opt.snapshot_every > 0 && cur.step % opt.snapshot_every == 0)
            result.snapshots.push_back(take_snapshot(cur, t));

        if (l < opt.tolerance) {
            result.stopped_on_tolerance = true;
            break;
        }
        if (l > divergence_limit)
            throw NumericalError("simulation diverged: L^n exceeded " +
                                 std::to_string(opt.divergence_factor) + " * L^0 at t = " +
                                 std::to_string(t));
    }

    result.final_state = std::move(cur);
    return result;
}

}  // namespace hypstab
