#include "hypstab/lyapunov.hpp"

#include <algorithm>
#include <cmath>

#include "hypstab/kernels.hpp"

namespace hypstab {

LyapunovWeights make_weights(const Discretization& d) {
    LyapunovWeights w;
    const std::size_t n = static_cast<std::size_t>(d.num_cells) + 2;
    w.p_plus.resize(n);
    w.p_minus.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = d.cell_center(static_cast<int>(j));
        w.p_plus[j] = std::exp(-d.mu * x);
        w.p_minus[j] = std::exp(d.mu * x);
    }
    return w;
}

double discrete_lyapunov(const StateField& state, const LyapunovWeights& w,
                         const Discretization& d) {
    return kernels::weighted_energy(state, w.p_plus, w.p_minus, d.dx);
}

double discrete_l2_norm_sq(const StateField& state, const Discretization& d) {
    double s = 0.0;
    for (int j = 1; j <= d.num_cells; ++j)
        s += state.u_plus[j] * state.u_plus[j] + state.u_minus[j] * state.u_minus[j];
    return d.dx * s;
}

double discrete_l2_norm(const StateField& state, const Discretization& d) {
    return std::sqrt(discrete_l2_norm_sq(state, d));
}

DecayRates decay_rates(const SystemSpec& spec, const Discretization& d,
                       const ViscosityCoeffs& v) {
    const double alpha = spec.alpha();
    const double eps = v.max();
    const double mu = d.mu;

    DecayRates r;
    r.alpha_mu = alpha * mu;
    r.eta_t = alpha * mu - eps * mu * mu;
    r.eta_n = alpha * mu * std::exp(-mu * d.dx) - eps * mu * mu;
    r.mu_feasible = eps == 0.0 || mu * std::exp(mu * d.dx) <= alpha / eps;
    return r;
}

std::vector<double> upper_bound_series(double l0, double rate, std::span<const double> times) {
    std::vector<double> out(times.size());
    for (std::size_t n = 0; n < times.size(); ++n) out[n] = std::exp(-rate * times[n]) * l0;
    return out;
}

double Matrix2::max_abs() const {
    return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

bool ConditionReport::all_pass() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionResidual& c) { return c.pass; });
}

namespace {

// K^T diag(w1, w2) K for a general 2x2 K.
Matrix2 congruence(const FeedbackMatrix& k, double w1, double w2) {
    return {k.k11 * k.k11 * w1 + k.k21 * k.k21 * w2, k.k11 * k.k12 * w1 + k.k21 * k.k22 * w2,
            k.k12 * k.k11 * w1 + k.k22 * k.k21 * w2, k.k12 * k.k12 * w1 + k.k22 * k.k22 * w2};
}

ConditionResidual evaluate(std::string id, const Matrix2& lhs, const Matrix2& rhs) {
    const double scale = std::max(lhs.max_abs(), rhs.max_abs());
    const double diff = std::max({std::abs(lhs.m11 - rhs.m11), std::abs(lhs.m12 - rhs.m12),
                                  std::abs(lhs.m21 - rhs.m21), std::abs(lhs.m22 - rhs.m22)});
    ConditionResidual r;
    r.id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = scale == 0.0 ? 0.0 : diff / scale;
    r.pass = r.residual < kConditionTolerance;
    return r;
}

}  // namespace

ConditionReport verify_k_conditions(const FeedbackMatrix& k, const SystemSpec& spec,
                                    const Discretization& d, const ViscosityCoeffs& v) {
    const double mu = d.mu;
    const double dx = d.dx;
    const double x0 = d.cell_center(0);
    const double x1 = d.cell_center(1);
    const double xJ = d.cell_center(d.num_cells);
    const double xJ1 = d.cell_center(d.num_cells + 1);

    const double ap = spec.a_plus;
    const double am = -spec.a_minus;
    const double ep = v.eps_plus / dx;
    const double em = v.eps_minus / dx;

    ConditionReport report;

    // Advective weights corrected by the discrete diffusion flux.
    const double bp = ap + ep * (std::exp(-mu * dx) - 1.0) * std::exp(mu * dx);
    const double bm = am + em * (std::exp(-mu * dx) - 1.0) * std::exp(mu * dx);
    report.conditions.push_back(
        evaluate("boundary-values",
                 congruence(k, bp * std::exp(-mu * x1), bm * std::exp(mu * xJ)),
                 {bp * std::exp(-mu * xJ1), 0.0, 0.0, bm * std::exp(mu * x0)}));

    report.conditions.push_back(
        evaluate("value-gradient-coupling",
                 congruence(k, ep * std::exp(-mu * x0), -em * std::exp(mu * xJ1)),
                 {ep * std::exp(-mu * xJ), 0.0, 0.0, -em * std::exp(mu * x1)}));

    report.conditions.push_back(
        evaluate("boundary-gradients",
                 congruence(k, ep * (ap + 2.0 * ep) * std::exp(-mu * x0),
                            -em * (am + 2.0 * em) * std::exp(mu * xJ1)),
                 {ep * (ap + 2.0 * ep) * std::exp(-mu * xJ), 0.0, 0.0,
                  -em * (am + 2.0 * em) * std::exp(mu * x1)}));
    return report;
}

ConditionReport verify_continuous_k_conditions(const FeedbackMatrix& k,
                                               const SystemSpec& spec, double eps,
                                               double mu) {
    const double ap = spec.a_plus;
    const double am = -spec.a_minus;

    ConditionReport report;
    report.conditions.push_back(
        evaluate("boundary-values",
                 congruence(k, ap - eps * mu, (am - eps * mu) * std::exp(mu)),
                 {(ap - eps * mu) * std::exp(-mu), 0.0, 0.0, am - eps * mu}));
    report.conditions.push_back(evaluate("boundary-gradients",
                                         congruence(k, 1.0, -std::exp(mu)),
                                         {std::exp(-mu), 0.0, 0.0, -1.0}));
    return report;
}

}  // namespace hypstab
