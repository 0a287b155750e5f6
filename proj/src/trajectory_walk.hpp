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

#include "radpair/trajectory.hpp"

namespace radpair::detail {

// Walks one trajectory over the scenario grid, calling on_state(i, state)
// for every grid index and on_event(event) for every jump. Shared by
// run_trajectory and the ensemble kernels so both see identical streams.
template <class OnState, class OnEvent>
void walk_trajectory(const EnsembleConfig& config, const Stepper& stepper, const PureState& initial,
                     std::size_t index, OnState&& on_state, OnEvent&& on_event)
{
    const Scenario& sc = config.scenario;
    RandomStream rng(trajectory_seed(config.master_seed, index));
    const std::size_t steps = sc.steps();

    PureState state = initial;
    on_state(std::size_t{0}, state);
    for (std::size_t i = 1; i <= steps; ++i) {
        if (state.alive) {
            const double t = static_cast<double>(i - 1) * sc.dt;
            std::optional<TrajectoryEvent> event =
                sc.theory == Theory::JonesHore
                    ? stepper.jh_advance(state, t, rng)
                    : stepper.kominis_advance(state, t, config.recombination_enabled, rng);
            if (event) {
                event->time = static_cast<double>(i) * sc.dt;
                on_event(*event);
            }
        }
        on_state(i, state);
    }
}

} // namespace radpair::detail
