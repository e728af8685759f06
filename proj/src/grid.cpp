#include "hypstab/grid.hpp"

#include <string>

#include "hypstab/errors.hpp"

namespace hypstab {

Discretization build_discretization(const SystemSpec& spec, int num_cells, double cfl,
                                    double mu) {
    if (num_cells < 2)
        throw ConfigError("J = " + std::to_string(num_cells) + ": at least 2 cells required");
    if (!(cfl > 0.0 && cfl <= 1.0))
        throw ConfigError("cfl = " + std::to_string(cfl) +
                          " violates the CFL stability condition max{a+,|a-|} dt/dx <= 1 "
                          "(required: 0 < cfl <= 1)");
    if (!(mu > 0.0)) throw ConfigError("mu must be positive");

    Discretization d;
    d.num_cells = num_cells;
    d.dx = 1.0 / num_cells;
    d.cfl = cfl;
    d.dt = cfl * d.dx / spec.max_speed();
    d.mu = mu;
    return d;
}

ViscosityCoeffs diffusion_coefficients(const SystemSpec& spec, const Discretization& d) {
    const double ap = spec.a_plus;
    const double am = -spec.a_minus;
    // Per-component Courant numbers a_+- dt/dx; they differ from d.cfl when the
    // two speeds differ.
    return {0.5 * ap * d.dx * (1.0 - ap * d.dt / d.dx),
            0.5 * am * d.dx * (1.0 - am * d.dt / d.dx)};
}

}  // namespace hypstab
