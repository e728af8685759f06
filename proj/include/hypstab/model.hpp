#pragma once

#include <algorithm>
#include <string>
#include <utility>

namespace hypstab {

// Characteristic speeds of a 2x2 strictly hyperbolic system, separated by
// zero: a_minus < 0 < a_plus.
struct SystemSpec {
    double a_plus = 0.0;
    double a_minus = 0.0;
    std::string label;

    double alpha() const { return std::min(a_plus, -a_minus); }
    double max_speed() const { return std::max(a_plus, -a_minus); }
};

// Constant steady state the system is linearised around. `primary_star` is the
// density-like quantity (rho* or h*), `flux_star` is q*, and `parameter` is
// the model constant (sound speed a for gas flow, gravity g for the channel).
struct SteadyState {
    double primary_star = 0.0;
    double flux_star = 0.0;
    double parameter = 1.0;
};

// Characteristic variables (U+, U-).
struct RiemannState {
    double u_plus = 0.0;
    double u_minus = 0.0;
};

// c = 1 wave equation: a+ = 1, a- = -1.
SystemSpec wave_system();

// Linearised isothermal gas flow around a sub-sonic steady state:
// a+- = q*/rho* +- a. Throws ConfigError if |q*/rho*| >= a.
SystemSpec euler_system(const SteadyState& steady);

// Linearised open-channel flow around a sub-critical steady state:
// a+- = q*/h* +- sqrt(g h*). Throws ConfigError if |q*/h*| >= sqrt(g h*).
SystemSpec saint_venant_system(const SteadyState& steady);

// U+ = (q - q*) - a^-(w - w*), U- = (q - q*) - a^+(w - w*), with w the
// density-like variable.
RiemannState to_riemann(double primary, double flux, const SteadyState& steady,
                        const SystemSpec& spec);

// Exact inverse of to_riemann; returns (primary, flux).
std::pair<double, double> from_riemann(const RiemannState& r, const SteadyState& steady,
                                       const SystemSpec& spec);

// A physical model bundled with the steady state its speeds come from.
struct Model {
    std::string label;
    SystemSpec spec;
    SteadyState steady;
};

// Built-in models by label: "wave" | "euler" | "saint-venant".
// The one-argument overload uses the reference parameters
// (euler: a = 1, q* = 0.6, rho* = 3; saint-venant: g = 9.8, q* = 10, h* = 4).
Model make_model(const std::string& label);
Model make_model(const std::string& label, const SteadyState& steady);

}  // namespace hypstab
