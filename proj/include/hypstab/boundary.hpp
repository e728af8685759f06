#pragma once

#include "hypstab/state.hpp"

namespace hypstab {

// Feedback matrix K of the boundary conditions
//   (U_0^+, U_{J+1}^-)^T = K (U_J^+, U_1^-)^T
//   (U_1^+ - U_0^+, U_{J+1}^- - U_J^-)^T = K (U_{J+1}^+ - U_J^+, U_1^- - U_0^-)^T.
struct FeedbackMatrix {
    double k11 = 0.0, k12 = 0.0;
    double k21 = 0.0, k22 = 0.0;

    static FeedbackMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static FeedbackMatrix diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }
    // The dissipative choice used throughout the experiments: diag(e^{-mu/2}).
    static FeedbackMatrix damping(double mu);

    double det() const { return k11 * k22 - k12 * k21; }
    double max_abs() const;
};

// Sets all four ghost values so that both feedback conditions hold to machine
// precision. The value condition gives U_0^+ and U_{J+1}^- directly; the
// gradient condition is a 2x2 linear solve for the remaining pair
// (U_{J+1}^+, U_0^-). Throws NumericalError when that system is singular
// (|det K| <= 1e-14 * max|K|^2).
void close_boundaries(StateField& state, const FeedbackMatrix& k);

// Value condition only: sets the inflow ghosts U_0^+ and U_{J+1}^-. This is
// all the plain upwind stencil reads.
void close_boundaries_value_only(StateField& state, const FeedbackMatrix& k);

}  // namespace hypstab
