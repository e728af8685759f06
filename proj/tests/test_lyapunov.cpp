#include <cmath>
#include <random>

#include "doctest.h"
#include "hypstab/lyapunov.hpp"

using namespace hypstab;

namespace {

StateField random_interior(int cells, std::mt19937& rng) {
    StateField s(cells);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int j = 1; j <= cells; ++j) {
        s.u_plus[j] = dist(rng);
        s.u_minus[j] = dist(rng);
    }
    return s;
}

int round4(double v) { return static_cast<int>(std::lround(v * 1e4)); }

}  // namespace

TEST_CASE("weights") {
    const Discretization d = build_discretization(wave_system(), 50, 0.5, 2.75);
    const LyapunovWeights w = make_weights(d);
    REQUIRE(w.p_plus.size() == 52);
    SUBCASE("reciprocal pairs") {
        for (std::size_t j = 0; j < w.p_plus.size(); ++j)
            CHECK(w.p_plus[j] * w.p_minus[j] == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("evaluated at cell centers") {
        CHECK(w.p_plus[1] == doctest::Approx(std::exp(-2.75 * 0.01)).epsilon(1e-14));
        CHECK(w.p_minus[50] == doctest::Approx(std::exp(2.75 * 0.99)).epsilon(1e-14));
        CHECK(w.p_plus[0] == doctest::Approx(std::exp(2.75 * 0.01)).epsilon(1e-14));
    }
}

TEST_CASE("discrete lyapunov function") {
    SUBCASE("zero state") {
        const Discretization d = build_discretization(wave_system(), 10, 0.5, 0.5);
        CHECK(discrete_lyapunov(StateField(10), make_weights(d), d) == 0.0);
    }
    SUBCASE("mu = 0 collapses to the squared L2 norm") {
        std::mt19937 rng(3);
        const StateField s = random_interior(100, rng);
        Discretization d;
        d.num_cells = 100;
        d.dx = 0.01;
        d.mu = 0.0;
        CHECK(discrete_lyapunov(s, make_weights(d), d) == discrete_l2_norm_sq(s, d));
    }
    SUBCASE("two-cell hand evaluation") {
        // J=2, dx=0.5, mu=1, U+ = (1,1), U- = (0,0):
        // L = 0.5 (e^{-0.25} + e^{-0.75})
        Discretization d;
        d.num_cells = 2;
        d.dx = 0.5;
        d.mu = 1.0;
        StateField s(2);
        s.u_plus[1] = 1.0;
        s.u_plus[2] = 1.0;
        const double expect = 0.5 * (std::exp(-0.25) + std::exp(-0.75));
        CHECK(discrete_lyapunov(s, make_weights(d), d) ==
              doctest::Approx(expect).epsilon(1e-14));
    }
    SUBCASE("ghost values are excluded") {
        Discretization d;
        d.num_cells = 4;
        d.dx = 0.25;
        d.mu = 1.0;
        StateField s(4);
        s.u_plus[0] = 1e6;
        s.u_minus[5] = -1e6;
        CHECK(discrete_lyapunov(s, make_weights(d), d) == 0.0);
    }
}

TEST_CASE("discrete L2 norm") {
    const Discretization d = build_discretization(wave_system(), 20, 0.5, 0.5);
    SUBCASE("zero") { CHECK(discrete_l2_norm(StateField(20), d) == 0.0); }
    SUBCASE("constant +-0.5 on the unit interval") {
        StateField s(20);
        for (int j = 1; j <= 20; ++j) {
            s.u_plus[j] = -0.5;
            s.u_minus[j] = 0.5;
        }
        CHECK(discrete_l2_norm(s, d) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    }
}

TEST_CASE("norm equivalence sandwich") {
    std::mt19937 rng(13);
    for (double mu : {0.25, 0.5, 1.25, 2.75, 4.5}) {
        const Discretization d = build_discretization(wave_system(), 64, 0.5, mu);
        const LyapunovWeights w = make_weights(d);
        for (int rep = 0; rep < 10; ++rep) {
            const StateField s = random_interior(64, rng);
            const double lyap = discrete_lyapunov(s, w, d);
            const double nsq = discrete_l2_norm_sq(s, d);
            CHECK(lyap >= std::exp(-mu) * nsq * (1.0 - 1e-13));
            CHECK(lyap <= std::exp(mu) * nsq * (1.0 + 1e-13));
        }
    }
}

TEST_CASE("decay rates") {
    const SystemSpec wave = wave_system();
    SUBCASE("printed four-decimal values, coarse grid") {
        const Discretization d = build_discretization(wave, 100, 0.5, 0.5);
        const DecayRates r = decay_rates(wave, d, diffusion_coefficients(wave, d));
        CHECK(r.alpha_mu == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(std::abs(r.eta_t - 0.499375) < 1e-12);
        CHECK(round4(r.eta_t) == 4994);
        CHECK(round4(r.eta_n) == 4969);
        CHECK(r.mu_feasible);
    }
    SUBCASE("printed four-decimal values, cfl 0.95") {
        const Discretization d = build_discretization(wave, 100, 0.95, 0.5);
        const DecayRates r = decay_rates(wave, d, diffusion_coefficients(wave, d));
        CHECK(round4(r.eta_t) == 4999);
        CHECK(round4(r.eta_n) == 4974);
    }
    SUBCASE("unit Courant number collapse") {
        const Discretization d = build_discretization(wave, 100, 1.0, 0.5);
        const ViscosityCoeffs v = diffusion_coefficients(wave, d);
        const DecayRates r = decay_rates(wave, d, v);
        CHECK(r.eta_t == r.alpha_mu);
        CHECK(r.eta_n == doctest::Approx(0.5 * std::exp(-0.5 * 0.01)).epsilon(1e-15));
        CHECK(r.mu_feasible);
    }
    SUBCASE("ordering eta_n <= eta_t <= alpha mu") {
        std::mt19937 rng(19);
        std::uniform_real_distribution<double> mu_dist(0.01, 6.0);
        std::uniform_real_distribution<double> cfl_dist(0.05, 1.0);
        for (int rep = 0; rep < 100; ++rep) {
            const Discretization d =
                build_discretization(wave, 10 + rep, cfl_dist(rng), mu_dist(rng));
            const DecayRates r = decay_rates(wave, d, diffusion_coefficients(wave, d));
            CHECK(r.eta_n <= r.eta_t);
            CHECK(r.eta_t <= r.alpha_mu);
        }
    }
    SUBCASE("closed forms recompute bit for bit") {
        const Discretization d = build_discretization(wave, 400, 0.95, 2.75);
        const ViscosityCoeffs v = diffusion_coefficients(wave, d);
        const DecayRates r = decay_rates(wave, d, v);
        const double alpha = wave.alpha();
        const double eps = v.max();
        CHECK(r.eta_t == alpha * d.mu - eps * d.mu * d.mu);
        CHECK(r.eta_n == alpha * d.mu * std::exp(-d.mu * d.dx) - eps * d.mu * d.mu);
    }
    SUBCASE("infeasible mu is reported, not rejected") {
        const Discretization d = build_discretization(wave, 10, 0.5, 20.0);
        const DecayRates r = decay_rates(wave, d, diffusion_coefficients(wave, d));
        CHECK_FALSE(r.mu_feasible);  // 20 e^2 > alpha/eps = 40
    }
}

TEST_CASE("upper bound series") {
    const std::vector<double> times{0.0, 0.5, 1.0, 2.0};
    SUBCASE("zero rate is constant") {
        for (double v : upper_bound_series(3.5, 0.0, times)) CHECK(v == 3.5);
    }
    SUBCASE("starts at l0") {
        CHECK(upper_bound_series(0.7, 2.0, times)[0] == 0.7);
    }
    SUBCASE("slower rates give larger bounds pointwise") {
        const Discretization d = build_discretization(wave_system(), 100, 0.5, 0.5);
        const DecayRates r =
            decay_rates(wave_system(), d, diffusion_coefficients(wave_system(), d));
        const auto a = upper_bound_series(1.0, r.alpha_mu, times);
        const auto t = upper_bound_series(1.0, r.eta_t, times);
        const auto n = upper_bound_series(1.0, r.eta_n, times);
        for (std::size_t i = 0; i < times.size(); ++i) {
            CHECK(a[i] <= t[i]);
            CHECK(t[i] <= n[i]);
        }
    }
}

TEST_CASE("discrete feedback-matrix conditions") {
    const std::vector<Model> models{make_model("wave"), make_model("euler"),
                                    make_model("saint-venant")};
    SUBCASE("the damping matrix satisfies all three conditions") {
        for (const Model& m : models)
            for (double mu : {0.25, 0.5, 1.25, 2.75, 4.5}) {
                const Discretization d = build_discretization(m.spec, 200, 0.5, mu);
                const ConditionReport rep = verify_k_conditions(
                    FeedbackMatrix::damping(mu), m.spec, d, diffusion_coefficients(m.spec, d));
                REQUIRE(rep.conditions.size() == 3);
                CHECK(rep.all_pass());
                for (const auto& c : rep.conditions) CHECK(c.residual < 1e-12);
            }
    }
    SUBCASE("a one-percent perturbation breaks the first condition") {
        const Model m = make_model("euler");
        const Discretization d = build_discretization(m.spec, 200, 0.5, 0.5);
        const FeedbackMatrix k = FeedbackMatrix::damping(0.5);
        const ConditionReport rep =
            verify_k_conditions(FeedbackMatrix::diagonal(1.01 * k.k11, 1.01 * k.k22), m.spec,
                                d, diffusion_coefficients(m.spec, d));
        CHECK_FALSE(rep.conditions[0].pass);
        CHECK(rep.conditions[0].residual > 1e-3);
        CHECK_FALSE(rep.all_pass());
    }
    SUBCASE("zero viscosity trivialises the gradient conditions") {
        const Model m = make_model("wave");
        const Discretization d = build_discretization(m.spec, 100, 1.0, 0.5);
        const ViscosityCoeffs v = diffusion_coefficients(m.spec, d);
        REQUIRE(v.max() == 0.0);
        const ConditionReport rep =
            verify_k_conditions(FeedbackMatrix::damping(0.5), m.spec, d, v);
        CHECK(rep.conditions[1].residual == 0.0);
        CHECK(rep.conditions[2].residual == 0.0);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("continuous feedback-matrix conditions") {
    const SystemSpec wave = wave_system();
    SUBCASE("inviscid damping matrix passes") {
        const ConditionReport rep =
            verify_continuous_k_conditions(FeedbackMatrix::damping(0.5), wave, 0.0, 0.5);
        REQUIRE(rep.conditions.size() == 2);
        CHECK(rep.all_pass());
    }
    SUBCASE("viscous damping matrix still passes") {
        const ConditionReport rep =
            verify_continuous_k_conditions(FeedbackMatrix::damping(0.5), wave, 0.0025, 0.5);
        CHECK(rep.all_pass());
        for (const auto& c : rep.conditions) CHECK(c.residual < 1e-13);
    }
    SUBCASE("zero matrix fails the value condition") {
        const ConditionReport rep =
            verify_continuous_k_conditions(FeedbackMatrix{}, wave, 0.0, 0.5);
        CHECK_FALSE(rep.conditions[0].pass);
        CHECK(rep.conditions[0].residual == 1.0);  // lhs is zero, rhs is not
    }
}
