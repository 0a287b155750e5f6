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
#include <string_view>
#include <vector>

#include "radpair/master_equation.hpp"
#include "radpair/random_stream.hpp"
#include "radpair/spin_space.hpp"

namespace radpair {

enum class EventKind { ProjectSinglet, ProjectTriplet, Recombine };
enum class Channel { Singlet, Triplet };

std::string_view to_string(EventKind kind);
std::string_view to_string(Channel channel);

struct TrajectoryEvent {
    double time = 0.0;
    EventKind kind = EventKind::Recombine;
    std::optional<Channel> channel; // set only for Recombine

    bool operator==(const TrajectoryEvent&) const = default;
};

struct StepResult {
    PureState state;
    std::optional<TrajectoryEvent> event;
};

/// Single-molecule update rules for one grid interval [t, t + dt].
///
/// Branches are mutually exclusive and picked with one uniform draw against
/// cumulative probabilities. When no jump fires the state evolves under
/// exp(-iH dt). A projection onto the subspace the state already occupies
/// is a no-op and is not reported as an event.
class Stepper {
public:
    Stepper(const SpinSpace& space, const Hamiltonian& h, double dt, double k_s, double k_t);

    /// Jones-Hore rules: recombine S with k_s dt <Q_S>, recombine T with
    /// k_t dt <Q_T>, project onto Q_T with k_s dt <Q_T>, project onto Q_S
    /// with k_t dt <Q_S>.
    StepResult jh_step(const PureState& state, double t, RandomStream& rng) const;

    /// Kominis rules: a Q_S measurement fires at rate (k_s + k_t)/2 with
    /// outcome probabilities <Q_S>, <Q_T>; if enabled, recombination fires
    /// independently with hazard k_s <Q_S> + k_t <Q_T>.
    StepResult kominis_step(const PureState& state, double t, bool recombination_enabled,
                            RandomStream& rng) const;

    // In-place forms of the two rules; the ensemble kernels use these.
    std::optional<TrajectoryEvent> jh_advance(PureState& state, double t, RandomStream& rng) const;
    std::optional<TrajectoryEvent> kominis_advance(PureState& state, double t, bool recombination_enabled,
                                                   RandomStream& rng) const;

    const ComplexMatrix& propagator() const { return propagator_; }

private:
    TrajectoryEvent project(PureState& state, const ComplexMatrix& q, EventKind kind, double t) const;
    TrajectoryEvent recombine(PureState& state, Channel channel, double t) const;
    void unitary(PureState& state) const;

    const SpinSpace* space_;
    double dt_;
    double k_s_;
    double k_t_;
    bool identity_propagator_;
    ComplexMatrix propagator_;
};

struct EnsembleConfig {
    Scenario scenario;
    std::size_t n_traj = 1;
    std::uint64_t master_seed = 0;
    bool recombination_enabled = false; // Kominis theory only

    void validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<PureState> states;
    std::vector<TrajectoryEvent> events;
};

/// The initial pure state of every trajectory: the dominant eigenvector of
/// rho0, which must be pure (purity 1 within 1e-12).
PureState initial_pure_state(const Scenario& scenario);

/// Full per-step record; depends only on (config, index).
Trajectory run_trajectory(const EnsembleConfig& config, std::size_t index);

} // namespace radpair
