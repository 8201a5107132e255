// SPDX-License-Identifier: MIT
//
// Serial vs OpenMP timings for the scan and oracle sweeps.
#include "mtwsphere/classifier.hpp"
#include "mtwsphere/mtw_oracle.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

using namespace mtwsphere;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void line(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %9.4f s  parallel %9.4f s  speedup %5.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads %d, best of %d\n", omp_get_max_threads(), reps);

    ScanOptions opt;
    opt.grid_size = 1 << 16;
    const CostModel pw = CostModel::power_law(Sign::Minus, 1.5);
    const SphereConfig cfg{1, 3};
    volatile double sink = 0;
    const double ss = best_of(reps, [&] { sink = sink + scan_serial(pw, cfg, opt).sup_values[0]; });
    const double sp = best_of(reps, [&] { sink = sink + scan(pw, cfg, opt).sup_values[0]; });
    line("scan, 65568 points", ss, sp);

    std::vector<OracleTask> tasks;
    for (double R : {0.5, 1.0, 2.0})
        for (const CostModel& m : {CostModel::half_square(), CostModel::chordal(R),
                                   CostModel::log_profile(Sign::Plus), CostModel::sqrt_one_plus_dsq(Sign::Minus)})
            for (int k = 1; k <= 16; ++k)
                for (auto oc : kAllCases)
                    tasks.push_back({m, R, R * std::numbers::pi * (0.1 + 0.8 * k / 17), oc});
    const double os = best_of(reps, [&] { sink = sink + oracle_sweep_serial(tasks).size(); });
    const double op = best_of(reps, [&] { sink = sink + oracle_sweep(tasks).size(); });
    line("oracle sweep, 768 points", os, op);
    return 0;
}
