// Compares the serial reference shot loop against the OpenMP-parallel one
// and checks that both produce the same report.
#include <chrono>
#include <iostream>

#include "ghzsim/runner.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
    uint64_t shots = argc > 1 ? std::stoull(argv[1]) : 2000;

    ghz::Scenario sc;
    sc.case_weights = {{ghz::PairCase::Cross, 0.5}, {ghz::PairCase::Same, 0.5}};
    ghz::NoiseSpec noise;
    noise.p = 0.5;
    sc.noise = noise;
    ghz::KerrParams kerr;
    kerr.alpha = {2.0, 0.0};
    kerr.theta = 0.1;
    sc.kerr = kerr;
    sc.shots = shots;
    sc.seed = 12345;

    auto time = [&](ghz::ExecutionMode mode) {
        auto t0 = std::chrono::steady_clock::now();
        ghz::RunReport r = ghz::run_scenario(sc, mode);
        auto t1 = std::chrono::steady_clock::now();
        return std::pair{std::chrono::duration<double>(t1 - t0).count(), std::move(r)};
    };

    auto [t_serial, r_serial] = time(ghz::ExecutionMode::Serial);
    auto [t_parallel, r_parallel] = time(ghz::ExecutionMode::Parallel);

    bool identical = r_serial.to_json() == r_parallel.to_json();
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::cout << "shots: " << shots << "\n"
              << "threads: " << threads << "\n"
              << "serial:   " << t_serial << " s (" << shots / t_serial << " shots/s)\n"
              << "parallel: " << t_parallel << " s (" << shots / t_parallel << " shots/s)\n"
              << "speedup:  " << t_serial / t_parallel << "x\n"
              << "reports identical: " << (identical ? "yes" : "NO") << "\n";
    return identical ? 0 : 1;
}
