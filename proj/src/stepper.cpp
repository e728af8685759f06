#include "hypstab/stepper.hpp"

namespace hypstab {

const char* to_string(Scheme s) {
    return s == Scheme::PlainUpwind ? "plain" : "viscous";
}

kernels::StepCoeffs step_coefficients(const SystemSpec& spec, const Discretization& d,
                                      const ViscosityCoeffs& v) {
    const double lam = d.dt / d.dx;
    return {spec.a_plus * lam, -spec.a_minus * lam, v.eps_plus * d.dt / (d.dx * d.dx),
            v.eps_minus * d.dt / (d.dx * d.dx)};
}

StateField step_viscous_upwind(StateField state, const SystemSpec& spec,
                               const Discretization& d, const ViscosityCoeffs& v,
                               const FeedbackMatrix& k) {
    close_boundaries(state, k);
    StateField next(d.num_cells);
    kernels::advance_interior(state, next, step_coefficients(spec, d, v));
    next.step = state.step + 1;
    return next;
}

StateField step_plain_upwind(StateField state, const SystemSpec& spec,
                             const Discretization& d, const FeedbackMatrix& k) {
    close_boundaries_value_only(state, k);
    // The outflow ghosts only appear under the zero diffusion weights; pin
    // them so stale values cannot leak through as 0 * NaN.
    state.u_plus[d.num_cells + 1] = 0.0;
    state.u_minus[0] = 0.0;
    StateField next(d.num_cells);
    kernels::advance_interior(state, next, step_coefficients(spec, d, ViscosityCoeffs{}));
    next.step = state.step + 1;
    return next;
}

}  // namespace hypstab
