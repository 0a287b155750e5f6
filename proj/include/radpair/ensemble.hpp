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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radpair/master_equation.hpp"
#include "radpair/trajectory.hpp"

namespace radpair {

enum class Conditioning { All, NonReacted };

/// Raw ensemble sums on the scenario grid: sum of |psi><psi| over alive
/// trajectories, the alive count, and every trajectory's event log.
struct EnsembleResult {
    Theory theory = Theory::JonesHore;
    std::size_t n_traj = 0;
    std::vector<double> times;
    std::vector<ComplexMatrix> rho_sum;
    std::vector<std::uint64_t> alive;
    std::vector<std::vector<TrajectoryEvent>> events;
};

/// Trajectories are reduced in min(n_traj, kEnsembleBlocks) contiguous
/// blocks, each summed in index order, then combined in block order. The
/// result is bit-identical for any thread count.
inline constexpr std::size_t kEnsembleBlocks = 32;

/// OpenMP kernel. `threads` = 0 uses the runtime default.
EnsembleResult accumulate_ensemble(const EnsembleConfig& config, int threads = 0);

/// Serial reference: one pass in trajectory order, plain summation.
EnsembleResult accumulate_ensemble_serial(const EnsembleConfig& config);

/// All: sum / n_traj (trace = surviving fraction). NonReacted: sum / alive
/// (trace 1); grid points with no survivors are flagged undefined.
RhoSeries ensemble_average(const EnsembleResult& result, Conditioning conditioning);

RhoSeries ensemble_average(const EnsembleConfig& config, Conditioning conditioning, int threads = 0);

/// First grid time at which no trajectory is alive, if any.
std::optional<double> first_empty_time(const EnsembleResult& result);

} // namespace radpair
