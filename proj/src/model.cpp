#include "hypstab/model.hpp"

#include <cmath>

#include "hypstab/errors.hpp"

namespace hypstab {

SystemSpec wave_system() { return {1.0, -1.0, "wave"}; }

SystemSpec euler_system(const SteadyState& steady) {
    if (steady.primary_star <= 0.0)
        throw ConfigError("euler: rho* must be positive");
    if (steady.parameter <= 0.0)
        throw ConfigError("euler: sound speed must be positive");
    const double velocity = steady.flux_star / steady.primary_star;
    if (std::abs(velocity) >= steady.parameter)
        throw ConfigError("euler: steady state is not sub-sonic (|q*/rho*| >= a), "
                          "speeds would not be separated by zero");
    return {velocity + steady.parameter, velocity - steady.parameter, "euler"};
}

SystemSpec saint_venant_system(const SteadyState& steady) {
    if (steady.primary_star <= 0.0)
        throw ConfigError("saint-venant: h* must be positive");
    if (steady.parameter <= 0.0)
        throw ConfigError("saint-venant: gravity must be positive");
    const double velocity = steady.flux_star / steady.primary_star;
    const double celerity = std::sqrt(steady.parameter * steady.primary_star);
    if (std::abs(velocity) >= celerity)
        throw ConfigError("saint-venant: steady state is not sub-critical "
                          "(|q*/h*| >= sqrt(g h*)), speeds would not be separated by zero");
    return {velocity + celerity, velocity - celerity, "saint-venant"};
}

RiemannState to_riemann(double primary, double flux, const SteadyState& steady,
                        const SystemSpec& spec) {
    const double dw = primary - steady.primary_star;
    const double dq = flux - steady.flux_star;
    return {dq - spec.a_minus * dw, dq - spec.a_plus * dw};
}

std::pair<double, double> from_riemann(const RiemannState& r, const SteadyState& steady,
                                       const SystemSpec& spec) {
    const double spread = spec.a_plus - spec.a_minus;
    const double dw = (r.u_plus - r.u_minus) / spread;
    const double dq = (spec.a_plus * r.u_plus - spec.a_minus * r.u_minus) / spread;
    return {steady.primary_star + dw, steady.flux_star + dq};
}

Model make_model(const std::string& label, const SteadyState& steady) {
    if (label == "wave") return {label, wave_system(), steady};
    if (label == "euler") return {label, euler_system(steady), steady};
    if (label == "saint-venant") return {label, saint_venant_system(steady), steady};
    throw ConfigError("unknown model '" + label + "' (expected wave | euler | saint-venant)");
}

Model make_model(const std::string& label) {
    if (label == "wave") return make_model(label, SteadyState{0.0, 0.0, 1.0});
    if (label == "euler") return make_model(label, SteadyState{3.0, 0.6, 1.0});
    if (label == "saint-venant") return make_model(label, SteadyState{4.0, 10.0, 9.8});
    throw ConfigError("unknown model '" + label + "' (expected wave | euler | saint-venant)");
}

}  // namespace hypstab
