#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "hypstab/kernels.hpp"

using namespace hypstab;

namespace {

StateField random_state(int cells, std::mt19937& rng) {
    StateField s(cells);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& v : s.u_plus) v = dist(rng);
    for (auto& v : s.u_minus) v = dist(rng);
    return s;
}

}  // namespace

TEST_CASE("parallel stencil kernel is bitwise identical to the serial reference") {
    std::mt19937 rng(3);
    const kernels::StepCoeffs c{0.45, 0.3, 0.02, 0.015};
    // sizes straddling the parallel cutoff
    for (int cells : {33, 4096, kernels::kParallelCutoff + 17}) {
        const StateField in = random_state(cells, rng);
        StateField a(cells);
        StateField b(cells);
        kernels::advance_interior(in, a, c);
        kernels::advance_interior_serial(in, b, c);
        CHECK(std::memcmp(a.u_plus.data(), b.u_plus.data(),
                          a.u_plus.size() * sizeof(double)) == 0);
        CHECK(std::memcmp(a.u_minus.data(), b.u_minus.data(),
                          a.u_minus.size() * sizeof(double)) == 0);
    }
}

TEST_CASE("energy reduction is blocked deterministically") {
    std::mt19937 rng(7);
    for (int cells : {100, kernels::kEnergyBlock - 1, kernels::kEnergyBlock,
                      kernels::kEnergyBlock + 1, 3 * kernels::kEnergyBlock + 5,
                      kernels::kParallelCutoff + 100}) {
        const StateField s = random_state(cells, rng);
        std::vector<double> wp(s.u_plus.size());
        std::vector<double> wm(s.u_plus.size());
        std::uniform_real_distribution<double> wdist(0.5, 2.0);
        for (auto& w : wp) w = wdist(rng);
        for (auto& w : wm) w = wdist(rng);
        const double dx = 1.0 / cells;

        const double par = kernels::weighted_energy(s, wp, wm, dx);
        const double ser = kernels::weighted_energy_serial(s, wp, wm, dx);
        CHECK(par == ser);

        // accuracy against a plain accumulation
        double plain = 0.0;
        for (int j = 1; j <= cells; ++j)
            plain += s.u_plus[j] * s.u_plus[j] * wp[j] + s.u_minus[j] * s.u_minus[j] * wm[j];
        plain *= dx;
        CHECK(par == doctest::Approx(plain).epsilon(1e-13));
    }
}

TEST_CASE("stencil kernel formula spot check") {
    // single interior cell, hand-evaluated update
    StateField in(1);
    in.u_plus = {2.0, 3.0, 5.0};   // ghost, cell 1, ghost
    in.u_minus = {7.0, 11.0, 13.0};
    StateField out(1);
    const kernels::StepCoeffs c{0.5, 0.25, 0.125, 0.0625};
    kernels::advance_interior_serial(in, out, c);
    // u+ : 3 - 0.5(3-2) + 0.125(5 - 6 + 2) = 2.625
    CHECK(out.u_plus[1] == doctest::Approx(2.625).epsilon(1e-15));
    // u- : 11 + 0.25(13-11) + 0.0625(13 - 22 + 7) = 11.375
    CHECK(out.u_minus[1] == doctest::Approx(11.375).epsilon(1e-15));
}
