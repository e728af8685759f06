#pragma once

#include "hypstab/boundary.hpp"
#include "hypstab/grid.hpp"
#include "hypstab/kernels.hpp"
#include "hypstab/state.hpp"

namespace hypstab {

enum class Scheme {
    PlainUpwind,    // first-order upwind transport
    ViscousUpwind,  // upwind transport plus the explicit eps_+- diffusion terms
};

const char* to_string(Scheme s);

kernels::StepCoeffs step_coefficients(const SystemSpec& spec, const Discretization& d,
                                      const ViscosityCoeffs& v);

// One explicit step of the viscous scheme. Closes the ghost cells of the
// input (both feedback conditions) and returns the advanced field with
// step incremented. The returned ghosts are unset.
StateField step_viscous_upwind(StateField state, const SystemSpec& spec,
                               const Discretization& d, const ViscosityCoeffs& v,
                               const FeedbackMatrix& k);

// Plain upwind step: eps = 0 and only the value condition is needed for the
// inflow ghosts.
StateField step_plain_upwind(StateField state, const SystemSpec& spec,
                             const Discretization& d, const FeedbackMatrix& k);

}  // namespace hypstab
