// Copyright 2026 The radpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP ensemble kernel on the desk example.
//   bench_ensemble [n_traj] [t_end] [threads]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "radpair/ensemble.hpp"

int main(int argc, char** argv)
{
    using namespace radpair;
    namespace chrono = std::chrono;

    const std::size_t n_traj = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 10000;
    const double t_end = argc > 2 ? std::atof(argv[2]) : 10.0;
    const int threads = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();

    for (Theory theory : {Theory::JonesHore, Theory::Kominis}) {
        EnsembleConfig cfg;
        cfg.scenario = desk_scenario(theory, 1.0, t_end);
        cfg.n_traj = n_traj;
        cfg.master_seed = 1;
        cfg.recombination_enabled = theory == Theory::Kominis;

        auto t0 = chrono::steady_clock::now();
        const EnsembleResult serial = accumulate_ensemble_serial(cfg);
        auto t1 = chrono::steady_clock::now();
        const EnsembleResult parallel = accumulate_ensemble(cfg, threads);
        auto t2 = chrono::steady_clock::now();

        double diff = 0;
        for (std::size_t i = 0; i < serial.rho_sum.size(); ++i)
            diff = std::max(diff, (serial.rho_sum[i] - parallel.rho_sum[i]).cwiseAbs().maxCoeff());

        const auto ms = [](auto d) { return chrono::duration_cast<chrono::milliseconds>(d).count(); };
        std::cout << to_string(theory) << ": n_traj=" << n_traj << " steps=" << cfg.scenario.steps()
                  << " serial=" << ms(t1 - t0) << "ms parallel(" << threads << ")=" << ms(t2 - t1)
                  << "ms max|diff|=" << diff / static_cast<double>(n_traj) << '\n';
    }
}
