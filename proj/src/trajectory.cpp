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

#include "radpair/trajectory.hpp"

#include <cmath>

#include "radpair/errors.hpp"
#include "trajectory_walk.hpp"

namespace radpair {

namespace {

// A state with at least this weight in a subspace already lies in it.
constexpr double kOccupiedThreshold = 1.0 - 1e-12;

// <v|Q|v> without temporaries.
double projector_weight(const ComplexMatrix& q, const ComplexVector& v)
{
    const Eigen::Index n = v.size();
    Complex sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        Complex row = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            row += std::conj(v(i)) * q(i, j);
        sum += row * v(j);
    }
    return sum.real();
}

double occupied_weight(double probability)
{
    return probability >= kOccupiedThreshold ? 0.0 : probability;
}

} // namespace

std::string_view to_string(EventKind kind)
{
    switch (kind) {
    case EventKind::ProjectSinglet:
        return "ProjectSinglet";
    case EventKind::ProjectTriplet:
        return "ProjectTriplet";
    case EventKind::Recombine:
        return "Recombine";
    }
    return "?";
}

std::string_view to_string(Channel channel)
{
    return channel == Channel::Singlet ? "singlet" : "triplet";
}

Stepper::Stepper(const SpinSpace& space, const Hamiltonian& h, double dt, double k_s, double k_t)
    : space_(&space), dt_(dt), k_s_(k_s), k_t_(k_t), identity_propagator_(h.is_zero())
{
    if (h.dim() != space.dim)
        throw ConfigError("stepper: hamiltonian and space dimensions differ");
    if (dt * (k_s + k_t) > 0.1 + 1e-15)
        throw ConfigError("stepper: dt*(k_s+k_t) must not exceed 0.1");
    if (identity_propagator_) {
        propagator_ = ComplexMatrix::Identity(space.dim, space.dim);
    } else {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.mat());
        const Eigen::VectorXd& energies = solver.eigenvalues();
        ComplexVector phases(energies.size());
        for (Eigen::Index i = 0; i < energies.size(); ++i)
            phases(i) = std::exp(Complex(0.0, -energies(i) * dt));
        propagator_ = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    }
}

TrajectoryEvent Stepper::project(PureState& state, const ComplexMatrix& q, EventKind kind, double t) const
{
    state.vec = (q * state.vec).eval();
    state.vec.normalize();
    return {t + dt_, kind, std::nullopt};
}

TrajectoryEvent Stepper::recombine(PureState& state, Channel channel, double t) const
{
    state.vec.setZero();
    state.alive = false;
    return {t + dt_, EventKind::Recombine, channel};
}

void Stepper::unitary(PureState& state) const
{
    if (identity_propagator_)
        return;
    state.vec = (propagator_ * state.vec).eval();
    state.vec.normalize();
}

std::optional<TrajectoryEvent> Stepper::jh_advance(PureState& state, double t, RandomStream& rng) const
{
    if (!state.alive)
        throw ConfigError("jh_step: cannot step a recombined molecule");
    const double ps = projector_weight(space_->q_singlet, state.vec);
    const double pt = projector_weight(space_->q_triplet, state.vec);

    const double u = rng.uniform();
    double edge = k_s_ * dt_ * ps;
    if (u < edge)
        return recombine(state, Channel::Singlet, t);
    edge += k_t_ * dt_ * pt;
    if (u < edge)
        return recombine(state, Channel::Triplet, t);
    edge += k_s_ * dt_ * occupied_weight(pt);
    if (u < edge)
        return project(state, space_->q_triplet, EventKind::ProjectTriplet, t);
    edge += k_t_ * dt_ * occupied_weight(ps);
    if (u < edge)
        return project(state, space_->q_singlet, EventKind::ProjectSinglet, t);
    unitary(state);
    return std::nullopt;
}

std::optional<TrajectoryEvent> Stepper::kominis_advance(PureState& state, double t,
                                                        bool recombination_enabled,
                                                        RandomStream& rng) const
{
    if (!state.alive)
        throw ConfigError("kominis_step: cannot step a recombined molecule");
    const double ps = projector_weight(space_->q_singlet, state.vec);
    const double pt = projector_weight(space_->q_triplet, state.vec);
    const double measurement_rate = 0.5 * (k_s_ + k_t_);

    const double u = rng.uniform();
    double edge = 0.0;
    if (recombination_enabled) {
        edge += k_s_ * dt_ * ps;
        if (u < edge)
            return recombine(state, Channel::Singlet, t);
        edge += k_t_ * dt_ * pt;
        if (u < edge)
            return recombine(state, Channel::Triplet, t);
    }
    edge += measurement_rate * dt_ * occupied_weight(ps);
    if (u < edge)
        return project(state, space_->q_singlet, EventKind::ProjectSinglet, t);
    edge += measurement_rate * dt_ * occupied_weight(pt);
    if (u < edge)
        return project(state, space_->q_triplet, EventKind::ProjectTriplet, t);
    unitary(state);
    return std::nullopt;
}

StepResult Stepper::jh_step(const PureState& state, double t, RandomStream& rng) const
{
    StepResult r{state, std::nullopt};
    r.event = jh_advance(r.state, t, rng);
    return r;
}

StepResult Stepper::kominis_step(const PureState& state, double t, bool recombination_enabled,
                                 RandomStream& rng) const
{
    StepResult r{state, std::nullopt};
    r.event = kominis_advance(r.state, t, recombination_enabled, rng);
    return r;
}

void EnsembleConfig::validate() const
{
    scenario.validate();
    if (n_traj < 1)
        throw ConfigError("n_traj must be at least 1");
    if (scenario.dt * (scenario.k_s + scenario.k_t) > 0.1 + 1e-15)
        throw ConfigError("step-size bound violated: dt*(k_s+k_t) > 0.1");
}

PureState initial_pure_state(const Scenario& scenario)
{
    if (scenario.psi0)
        return *scenario.psi0;
    const ComplexMatrix& rho = scenario.rho0.mat;
    const double trace = rho.trace().real();
    const double purity = (rho * rho).trace().real();
    if (std::abs(trace - 1.0) > 1e-12 || std::abs(purity - 1.0) > 1e-12)
        throw ConfigError("trajectories need a normalized pure initial state");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(rho));
    const Eigen::Index top = solver.eigenvalues().size() - 1;
    return {solver.eigenvectors().col(top).normalized(), true};
}

Trajectory run_trajectory(const EnsembleConfig& config, std::size_t index)
{
    config.validate();
    if (index >= config.n_traj)
        throw ConfigError("trajectory index out of range");
    const Scenario& sc = config.scenario;
    const Stepper stepper(sc.space, sc.hamiltonian, sc.dt, sc.k_s, sc.k_t);
    const std::size_t steps = sc.steps();
    Trajectory traj;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);

    detail::walk_trajectory(
        config, stepper, initial_pure_state(sc), index,
        [&](std::size_t i, const PureState& state) {
            traj.times.push_back(static_cast<double>(i) * sc.dt);
            traj.states.push_back(state);
        },
        [&](const TrajectoryEvent& e) { traj.events.push_back(e); });
    return traj;
}

} // namespace radpair
