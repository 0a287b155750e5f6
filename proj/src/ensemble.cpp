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

#include "radpair/ensemble.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "radpair/errors.hpp"
#include "trajectory_walk.hpp"

namespace radpair {

namespace {

// Flat per-grid-point accumulator: dim*dim complex entries per time.
struct Partial {
    std::size_t dim = 0;
    std::vector<Complex> rho;
    std::vector<std::uint64_t> alive;

    Partial(std::size_t n_times, std::size_t d) : dim(d), rho(n_times * d * d), alive(n_times) {}

    void add(std::size_t i, const PureState& state)
    {
        if (!state.alive)
            return;
        ++alive[i];
        Complex* out = rho.data() + i * dim * dim;
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                out[r * dim + c] += state.vec[r] * std::conj(state.vec[c]);
    }

    void merge(const Partial& other)
    {
        for (std::size_t k = 0; k < rho.size(); ++k)
            rho[k] += other.rho[k];
        for (std::size_t k = 0; k < alive.size(); ++k)
            alive[k] += other.alive[k];
    }
};

void simulate_range(const EnsembleConfig& config, const Stepper& stepper, const PureState& initial,
                    std::size_t begin, std::size_t end, Partial& partial,
                    std::vector<std::vector<TrajectoryEvent>>& events)
{
    for (std::size_t index = begin; index < end; ++index) {
        detail::walk_trajectory(
            config, stepper, initial, index,
            [&](std::size_t i, const PureState& state) { partial.add(i, state); },
            [&](const TrajectoryEvent& e) { events[index].push_back(e); });
    }
}

EnsembleResult finish(const EnsembleConfig& config, const Partial& total,
                      std::vector<std::vector<TrajectoryEvent>> events)
{
    const Scenario& sc = config.scenario;
    const std::size_t n_times = sc.steps() + 1;
    const auto d = static_cast<Eigen::Index>(total.dim);

    EnsembleResult result;
    result.theory = sc.theory;
    result.n_traj = config.n_traj;
    result.times.resize(n_times);
    result.rho_sum.reserve(n_times);
    for (std::size_t i = 0; i < n_times; ++i) {
        result.times[i] = static_cast<double>(i) * sc.dt;
        ComplexMatrix m(d, d);
        for (Eigen::Index r = 0; r < d; ++r)
            for (Eigen::Index c = 0; c < d; ++c)
                m(r, c) = total.rho[i * total.dim * total.dim + static_cast<std::size_t>(r * d + c)];
        result.rho_sum.push_back(std::move(m));
    }
    result.alive = total.alive;
    result.events = std::move(events);
    return result;
}

} // namespace

EnsembleResult accumulate_ensemble_serial(const EnsembleConfig& config)
{
    config.validate();
    const Scenario& sc = config.scenario;
    const Stepper stepper(sc.space, sc.hamiltonian, sc.dt, sc.k_s, sc.k_t);
    const PureState initial = initial_pure_state(sc);

    Partial total(sc.steps() + 1, static_cast<std::size_t>(sc.space.dim));
    std::vector<std::vector<TrajectoryEvent>> events(config.n_traj);
    simulate_range(config, stepper, initial, 0, config.n_traj, total, events);
    return finish(config, total, std::move(events));
}

EnsembleResult accumulate_ensemble(const EnsembleConfig& config, int threads)
{
    config.validate();
    const Scenario& sc = config.scenario;
    const Stepper stepper(sc.space, sc.hamiltonian, sc.dt, sc.k_s, sc.k_t);
    const PureState initial = initial_pure_state(sc);
    const std::size_t n_times = sc.steps() + 1;
    const auto dim = static_cast<std::size_t>(sc.space.dim);

    const std::size_t n_blocks = std::min(config.n_traj, kEnsembleBlocks);
    std::vector<Partial> partials(n_blocks, Partial(n_times, dim));
    std::vector<std::vector<TrajectoryEvent>> events(config.n_traj);

#ifdef _OPENMP
    const int n_threads = threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
#endif
    const auto n_blocks_signed = static_cast<long long>(n_blocks);
    // Block boundaries depend only on n_traj; the thread count only decides
    // who computes which block.
#pragma omp parallel for schedule(dynamic, 1) num_threads(n_threads)
    for (long long b = 0; b < n_blocks_signed; ++b) {
        const auto block = static_cast<std::size_t>(b);
        const std::size_t begin = block * config.n_traj / n_blocks;
        const std::size_t end = (block + 1) * config.n_traj / n_blocks;
        simulate_range(config, stepper, initial, begin, end, partials[block], events);
    }

    Partial& total = partials.front();
    for (std::size_t b = 1; b < n_blocks; ++b)
        total.merge(partials[b]);
    return finish(config, total, std::move(events));
}

RhoSeries ensemble_average(const EnsembleResult& result, Conditioning conditioning)
{
    RhoSeries series;
    series.theory = result.theory;
    series.times = result.times;
    series.states.reserve(result.times.size());
    series.defined.assign(result.times.size(), true);
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        const ComplexMatrix& sum = result.rho_sum[i];
        if (conditioning == Conditioning::All) {
            series.states.push_back({sum / static_cast<double>(result.n_traj)});
        } else if (result.alive[i] == 0) {
            series.states.push_back({ComplexMatrix::Zero(sum.rows(), sum.cols())});
            series.defined[i] = false;
        } else {
            series.states.push_back({sum / static_cast<double>(result.alive[i])});
        }
    }
    return series;
}

RhoSeries ensemble_average(const EnsembleConfig& config, Conditioning conditioning, int threads)
{
    return ensemble_average(accumulate_ensemble(config, threads), conditioning);
}

std::optional<double> first_empty_time(const EnsembleResult& result)
{
    for (std::size_t i = 0; i < result.alive.size(); ++i)
        if (result.alive[i] == 0)
            return result.times[i];
    return std::nullopt;
}

} // namespace radpair
