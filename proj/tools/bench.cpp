// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks
//
// Times the serial experiment runner against the OpenMP one on the same grid
// and verifies both produce identical records.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scnsim/harness.hpp"

int main(int argc, char** argv) {
    int runs = 40;
    if (argc > 1)
        runs = std::atoi(argv[1]);

    scnsim::Config cfg;
    cfg.load_term_sign = scnsim::LoadTermSign::Reward;
    scnsim::SweepSpec sweep{{60}, {12, 24, 36}};

    using clock = std::chrono::steady_clock;

    // warm up allocator and caches so neither runner pays first-touch costs
    scnsim::run_experiment(cfg, sweep, 2, scnsim::AlgorithmSelection::Both,
                           scnsim::ExecutionMode::Serial);

    const auto t0 = clock::now();
    const auto serial =
        scnsim::run_experiment(cfg, sweep, runs, scnsim::AlgorithmSelection::Both,
                               scnsim::ExecutionMode::Serial);
    const auto t1 = clock::now();
    const auto parallel =
        scnsim::run_experiment(cfg, sweep, runs, scnsim::AlgorithmSelection::Both,
                               scnsim::ExecutionMode::Parallel);
    const auto t2 = clock::now();

    const double serial_s = std::chrono::duration<double>(t1 - t0).count();
    const double parallel_s = std::chrono::duration<double>(t2 - t1).count();

#ifdef _OPENMP
    std::cout << "threads:  " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads:  1 (built without OpenMP)\n";
#endif
    std::cout << "grid:     " << sweep.num_picocells.size() << " points x " << runs << " runs\n"
              << "records:  " << serial.size() << "\n"
              << "serial:   " << serial_s << " s\n"
              << "parallel: " << parallel_s << " s\n"
              << "speedup:  " << serial_s / parallel_s << "x\n";

    if (scnsim::records_to_csv(serial) != scnsim::records_to_csv(parallel)) {
        std::cerr << "FAIL: serial and parallel runs differ\n";
        return 1;
    }
    std::cout << "serial and parallel records identical\n";
    return 0;
}
