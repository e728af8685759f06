#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypstab/boundary.hpp"
#include "hypstab/grid.hpp"
#include "hypstab/state.hpp"

namespace hypstab {

// Exponential weights p+_j = e^{-mu x_j}, p-_j = e^{+mu x_j} at the cell
// centres, j = 0..J+1. Precomputed once per (J, mu); p+_j p-_j = 1 up to
// roundoff.
struct LyapunovWeights {
    std::vector<double> p_plus;
    std::vector<double> p_minus;
};

LyapunovWeights make_weights(const Discretization& d);

// L^n = dx sum_{j=1..J} [ (U+_j)^2 e^{-mu x_j} + (U-_j)^2 e^{mu x_j} ].
// Ghost cells are excluded.
double discrete_lyapunov(const StateField& state, const LyapunovWeights& w,
                         const Discretization& d);

// sqrt(dx sum_{j=1..J} (U+_j)^2 + (U-_j)^2), and its square.
double discrete_l2_norm(const StateField& state, const Discretization& d);
double discrete_l2_norm_sq(const StateField& state, const Discretization& d);

// Decay-rate family for a given grid and viscosity, with
// alpha = min{a+, |a-|} and eps = max{eps+, eps-}:
//   alpha_mu = alpha mu           (inviscid ideal)
//   eta_t    = alpha mu - eps mu^2
//   eta_n    = alpha mu e^{-mu dx} - eps mu^2
// mu is feasible for the discrete decay guarantee when mu e^{mu dx} <= alpha/eps
// (always true for eps = 0). Always eta_n <= eta_t <= alpha_mu.
struct DecayRates {
    double alpha_mu = 0.0;
    double eta_t = 0.0;
    double eta_n = 0.0;
    bool mu_feasible = true;
};

DecayRates decay_rates(const SystemSpec& spec, const Discretization& d,
                       const ViscosityCoeffs& v);

// e^{-rate t^n} * l0 on the given time stamps.
std::vector<double> upper_bound_series(double l0, double rate, std::span<const double> times);

struct Matrix2 {
    double m11 = 0.0, m12 = 0.0;
    double m21 = 0.0, m22 = 0.0;

    double max_abs() const;
};

// One algebraic condition K^T A K = B evaluated numerically. The residual is
// max|lhs - rhs| relative to the larger side's max-abs entry (defined as 0
// when both sides vanish); pass means residual < 1e-12.
struct ConditionResidual {
    std::string id;
    Matrix2 lhs;
    Matrix2 rhs;
    double residual = 0.0;
    bool pass = false;
};

struct ConditionReport {
    std::vector<ConditionResidual> conditions;

    bool all_pass() const;
};

inline constexpr double kConditionTolerance = 1e-12;

// The three discrete dissipativity conditions on K for the viscous scheme,
// evaluated with the ghost/interior centres x_0, x_1, x_J, x_{J+1}.
// Failures are reported, not thrown.
ConditionReport verify_k_conditions(const FeedbackMatrix& k, const SystemSpec& spec,
                                    const Discretization& d, const ViscosityCoeffs& v);

// The two dissipativity conditions of the continuous viscous system.
ConditionReport verify_continuous_k_conditions(const FeedbackMatrix& k,
                                               const SystemSpec& spec, double eps,
                                               double mu);

}  // namespace hypstab
