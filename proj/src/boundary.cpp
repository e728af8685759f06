#include "hypstab/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "hypstab/errors.hpp"

namespace hypstab {

FeedbackMatrix FeedbackMatrix::damping(double mu) {
    const double k = std::exp(-0.5 * mu);
    return diagonal(k, k);
}

double FeedbackMatrix::max_abs() const {
    return std::max({std::abs(k11), std::abs(k12), std::abs(k21), std::abs(k22)});
}

void close_boundaries_value_only(StateField& state, const FeedbackMatrix& k) {
    const int J = state.num_cells();
    const double in_plus = state.u_plus[J];    // U_J^+
    const double in_minus = state.u_minus[1];  // U_1^-
    state.u_plus[0] = k.k11 * in_plus + k.k12 * in_minus;
    state.u_minus[J + 1] = k.k21 * in_plus + k.k22 * in_minus;
}

void close_boundaries(StateField& state, const FeedbackMatrix& k) {
    const int J = state.num_cells();
    close_boundaries_value_only(state, k);

    // Remaining unknowns are the outflow ghosts U_{J+1}^+ and U_0^-. Writing
    // g = (U_{J+1}^+ - U_J^+, U_1^- - U_0^-)^T, the gradient condition reads
    // K g = l with l known after the value closure; solve the 2x2 system.
    const double l1 = state.u_plus[1] - state.u_plus[0];
    const double l2 = state.u_minus[J + 1] - state.u_minus[J];

    const double det = k.det();
    const double scale = k.max_abs();
    if (std::abs(det) <= 1e-14 * scale * scale)
        throw NumericalError("boundary closure failed: feedback matrix gives a singular "
                             "gradient system (|det K| <= 1e-14 |K|^2)");

    const double g1 = (k.k22 * l1 - k.k12 * l2) / det;
    const double g2 = (k.k11 * l2 - k.k21 * l1) / det;
    state.u_plus[J + 1] = state.u_plus[J] + g1;
    state.u_minus[0] = state.u_minus[1] - g2;
}

}  // namespace hypstab
