#pragma once

#include <span>

#include "hypstab/state.hpp"

namespace hypstab::kernels {

// Dimensionless stencil coefficients of one explicit step:
//   c_+- = |a_+-| dt/dx,  d_+- = eps_+- dt/dx^2.
struct StepCoeffs {
    double c_plus = 0.0;
    double c_minus = 0.0;
    double d_plus = 0.0;
    double d_minus = 0.0;
};

// One update of the interior cells 1..J:
//   out+_j = u+_j - c+ (u+_j - u+_{j-1}) + d+ (u+_{j+1} - 2 u+_j + u+_{j-1})
//   out-_j = u-_j + c- (u-_{j+1} - u-_j) + d- (u-_{j+1} - 2 u-_j + u-_{j-1})
// Ghost values of `in` must be closed (they are read, for d = 0 only as a
// zero-weighted operand). Each cell is written independently, so the parallel
// version is bitwise identical to the serial reference for any thread count.
void advance_interior(const StateField& in, StateField& out, const StepCoeffs& c);
void advance_interior_serial(const StateField& in, StateField& out, const StepCoeffs& c);

// dx * sum_{j=1..J} (u+_j^2 w+_j + u-_j^2 w-_j) over the interior. Summation
// is blocked with a fixed block size and the block partials are folded in
// index order, so the result does not depend on the thread count.
double weighted_energy(const StateField& state, std::span<const double> w_plus,
                       std::span<const double> w_minus, double dx);
double weighted_energy_serial(const StateField& state, std::span<const double> w_plus,
                              std::span<const double> w_minus, double dx);

// Cells below this count always run serially; the grids of the reference
// experiments (J <= 6400) stay below it.
inline constexpr int kParallelCutoff = 1 << 17;
inline constexpr int kEnergyBlock = 1 << 12;

}  // namespace hypstab::kernels
