// Timing comparison of the parallel kernels against the serial reference:
// interior stencil update and weighted energy reduction, across grid sizes.

#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hypstab/kernels.hpp"
#include "hypstab/state.hpp"

namespace {

using hypstab::StateField;
namespace kernels = hypstab::kernels;

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

StateField random_state(int cells, std::mt19937& rng) {
    StateField s(cells);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& v : s.u_plus) v = dist(rng);
    for (auto& v : s.u_minus) v = dist(rng);
    return s;
}

template <typename F>
double time_reps(int reps, F&& body) {
    body();  // warm up
    const double t0 = now_seconds();
    for (int r = 0; r < reps; ++r) body();
    return (now_seconds() - t0) / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the same serial code\n");
#endif
    std::printf("%10s  %14s  %14s  %8s  %14s  %14s  %8s\n", "cells", "step serial",
                "step parallel", "speedup", "energy serial", "energy parallel", "speedup");

    std::mt19937 rng(7);
    const kernels::StepCoeffs coeffs{0.45, 0.45, 0.025, 0.02};

    for (int cells : {1 << 12, 1 << 14, 1 << 17, 1 << 20, 1 << 22}) {
        const StateField in = random_state(cells, rng);
        StateField out(cells);
        std::vector<double> wp(in.u_plus.size(), 0.9);
        std::vector<double> wm(in.u_plus.size(), 1.1);
        const double dx = 1.0 / cells;
        const int reps = std::max(4, (1 << 24) / cells);

        const double ts = time_reps(reps, [&] { kernels::advance_interior_serial(in, out, coeffs); });
        const double tp = time_reps(reps, [&] { kernels::advance_interior(in, out, coeffs); });

        volatile double sink = 0.0;
        const double es = time_reps(reps, [&] { sink = kernels::weighted_energy_serial(in, wp, wm, dx); });
        const double ep = time_reps(reps, [&] { sink = kernels::weighted_energy(in, wp, wm, dx); });
        (void)sink;

        std::printf("%10d  %11.1f ns  %11.1f ns  %7.2fx  %11.1f ns  %11.1f ns  %7.2fx\n",
                    cells, ts * 1e9, tp * 1e9, ts / tp, es * 1e9, ep * 1e9, es / ep);
    }
    return 0;
}
