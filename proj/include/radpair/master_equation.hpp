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

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "radpair/spin_space.hpp"

namespace radpair {

enum class Theory { Kominis, JonesHore };

std::string_view to_string(Theory theory);

/// Full model configuration. Time is measured in units of 1/k_S.
struct Scenario {
    SpinSpace space;
    Theory theory = Theory::JonesHore;
    Hamiltonian hamiltonian = Hamiltonian::zero(2);
    double k_s = 1.0;
    double k_t = 0.0;
    DensityMatrix rho0;
    std::optional<PureState> psi0; // pure initial state for trajectories, when known exactly
    double t_end = 10.0;
    double dt = 1e-3;

    /// Throws ConfigError when a bound is violated: positive dt and t_end,
    /// dt <= t_end, dt * max(k_s, k_t) <= 0.1, non-negative rates, matching
    /// shapes.
    void validate() const;

    /// Number of integration steps; the grid is t_i = i * dt, i = 0..n.
    std::size_t steps() const;
};

/// Desk example: H = 0, k_T = 0, coherent S/T start.
Scenario desk_scenario(Theory theory, double k_s = 1.0, double t_end = 10.0, double dt = 1e-3);

/// Time-indexed density matrices. `defined[i]` is false where a conditional
/// ensemble had no members; the state there is a zero placeholder.
struct RhoSeries {
    Theory theory = Theory::JonesHore;
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::vector<bool> defined;

    std::size_t size() const { return times.size(); }
};

/// -i[H, rho] - ((k_s + k_t)/2)(Q_S rho + rho Q_S - 2 Q_S rho Q_S)
ComplexMatrix kominis_rhs(const SpinSpace& space, const ComplexMatrix& rho,
                          const Hamiltonian& h, double k_s, double k_t);

/// -i[H, rho] - (k_s + k_t) rho + k_s Q_T rho Q_T + k_t Q_S rho Q_S
ComplexMatrix jones_hore_rhs(const SpinSpace& space, const ComplexMatrix& rho,
                             const Hamiltonian& h, double k_s, double k_t);

using Generator = std::function<ComplexMatrix(const ComplexMatrix&)>;

struct IntegrationChecks {
    bool trace_preserving = false;
    double max_hermitian_correction = 1e-8;
    double min_eigenvalue = -1e-9;
    double trace_tolerance = 1e-9;
};

/// Classic fourth-order Runge-Kutta over the scenario grid for an arbitrary
/// generator. After each step rho is replaced by its Hermitian part; the
/// correction, positivity and trace bounds are checked and a violation
/// throws NumericalError naming the time and the invariant.
RhoSeries integrate(const Generator& rhs, const DensityMatrix& rho0, double dt, std::size_t steps,
                    const IntegrationChecks& checks);

/// Integrates the scenario's master equation.
RhoSeries evolve(const Scenario& scenario);

} // namespace radpair
