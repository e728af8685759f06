#pragma once

#include <algorithm>

#include "hypstab/model.hpp"

namespace hypstab {

// Uniform space-time grid on [0,1] with J cells plus one ghost cell on each
// side. Cell centres are x_j = (j - 1/2) dx for j = 0..J+1, so the ghost
// centres sit at -dx/2 and 1 + dx/2.
struct Discretization {
    int num_cells = 0;  // J
    double dx = 0.0;    // 1/J
    double cfl = 0.0;   // max{a+,|a-|} dt/dx, in (0,1]
    double dt = 0.0;
    double mu = 0.0;    // Lyapunov weight parameter, > 0

    double cell_center(int j) const { return (j - 0.5) * dx; }
};

// dx = 1/J, dt = cfl*dx/max{a+,|a-|}. Throws ConfigError for J < 2,
// cfl outside (0,1] or mu <= 0.
Discretization build_discretization(const SystemSpec& spec, int num_cells, double cfl,
                                    double mu);

// Numerical diffusion of the upwind scheme, from its second-order modified
// equation: eps+- = 1/2 |a+-| dx (1 - |a+-| dt/dx). Nonnegative under the
// CFL condition, zero exactly when |a+-| dt = dx.
struct ViscosityCoeffs {
    double eps_plus = 0.0;
    double eps_minus = 0.0;

    double max() const { return std::max(eps_plus, eps_minus); }
};

ViscosityCoeffs diffusion_coefficients(const SystemSpec& spec, const Discretization& d);

}  // namespace hypstab
