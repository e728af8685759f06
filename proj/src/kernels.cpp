#include "hypstab/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypstab::kernels {

namespace {

inline bool go_parallel(int n) {
#ifdef _OPENMP
    return n >= kParallelCutoff && !omp_in_parallel();
#else
    (void)n;
    return false;
#endif
}

inline void advance_cell(const double* up, const double* um, double* op, double* om, int j,
                         const StepCoeffs& c) {
    op[j] = up[j] - c.c_plus * (up[j] - up[j - 1]) +
            c.d_plus * (up[j + 1] - 2.0 * up[j] + up[j - 1]);
    om[j] = um[j] + c.c_minus * (um[j + 1] - um[j]) +
            c.d_minus * (um[j + 1] - 2.0 * um[j] + um[j - 1]);
}

inline double energy_block(const double* up, const double* um, const double* wp,
                           const double* wm, int first, int last) {
    double s = 0.0;
    for (int j = first; j <= last; ++j) s += up[j] * up[j] * wp[j] + um[j] * um[j] * wm[j];
    return s;
}

}  // namespace

void advance_interior(const StateField& in, StateField& out, const StepCoeffs& c) {
    const int J = in.num_cells();
    assert(out.num_cells() == J);
    const double* up = in.u_plus.data();
    const double* um = in.u_minus.data();
    double* op = out.u_plus.data();
    double* om = out.u_minus.data();

    if (go_parallel(J)) {
#pragma omp parallel for schedule(static)
        for (int j = 1; j <= J; ++j) advance_cell(up, um, op, om, j, c);
    } else {
        for (int j = 1; j <= J; ++j) advance_cell(up, um, op, om, j, c);
    }
}

void advance_interior_serial(const StateField& in, StateField& out, const StepCoeffs& c) {
    const int J = in.num_cells();
    assert(out.num_cells() == J);
    const double* up = in.u_plus.data();
    const double* um = in.u_minus.data();
    double* op = out.u_plus.data();
    double* om = out.u_minus.data();
    for (int j = 1; j <= J; ++j) advance_cell(up, um, op, om, j, c);
}

double weighted_energy(const StateField& state, std::span<const double> w_plus,
                       std::span<const double> w_minus, double dx) {
    const int J = state.num_cells();
    assert(static_cast<int>(w_plus.size()) >= J + 2 && static_cast<int>(w_minus.size()) >= J + 2);
    const double* up = state.u_plus.data();
    const double* um = state.u_minus.data();
    const double* wp = w_plus.data();
    const double* wm = w_minus.data();

    const int nblocks = (J + kEnergyBlock - 1) / kEnergyBlock;
    if (nblocks <= 1) return dx * energy_block(up, um, wp, wm, 1, J);

    std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
    if (go_parallel(J)) {
#pragma omp parallel for schedule(static)
        for (int b = 0; b < nblocks; ++b) {
            const int first = 1 + b * kEnergyBlock;
            const int last = std::min(J, first + kEnergyBlock - 1);
            partial[b] = energy_block(up, um, wp, wm, first, last);
        }
    } else {
        for (int b = 0; b < nblocks; ++b) {
            const int first = 1 + b * kEnergyBlock;
            const int last = std::min(J, first + kEnergyBlock - 1);
            partial[b] = energy_block(up, um, wp, wm, first, last);
        }
    }
    double total = 0.0;
    for (int b = 0; b < nblocks; ++b) total += partial[b];
    return dx * total;
}

double weighted_energy_serial(const StateField& state, std::span<const double> w_plus,
                              std::span<const double> w_minus, double dx) {
    const int J = state.num_cells();
    const double* up = state.u_plus.data();
    const double* um = state.u_minus.data();
    const double* wp = w_plus.data();
    const double* wm = w_minus.data();

    const int nblocks = (J + kEnergyBlock - 1) / kEnergyBlock;
    if (nblocks <= 1) return dx * energy_block(up, um, wp, wm, 1, J);

    double total = 0.0;
    for (int b = 0; b < nblocks; ++b) {
        const int first = 1 + b * kEnergyBlock;
        const int last = std::min(J, first + kEnergyBlock - 1);
        total += energy_block(up, um, wp, wm, first, last);
    }
    return dx * total;
}

}  // namespace hypstab::kernels
