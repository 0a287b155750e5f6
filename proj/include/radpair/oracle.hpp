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

#include "radpair/master_equation.hpp"
#include "radpair/spin_space.hpp"

// Closed-form and brute-force references for the desk example (H = 0,
// k_T = 0, coherent S/T start). Nothing here calls the integrator, the
// trajectory sampler or the diagnostics module.
namespace radpair::oracle {

/// Jones-Hore solution: [[x/2, x/2], [x/2, 1/2]] with x = exp(-k_s t).
DensityMatrix jh_closed_form(double t, double k_s);

/// Kominis solution: [[1/2, y/2], [y/2, 1/2]] with y = exp(-k_s t / 2).
DensityMatrix kominis_closed_form(double t, double k_s);

/// Two-level atom, no photon detected up to t: (exp(-gamma t/2)|e> + |g>)/N,
/// components ordered (e, g).
PureState atom_no_photon_state(double t, double gamma);
double atom_excited_population(double t, double gamma);

/// Exact expectation recursion of the three-branch jump process,
/// rho <- (1 - k_s dt) rho + k_s dt Q_T rho Q_T, iterated on the grid.
/// Requires k_s dt <= 1e-3.
RhoSeries discrete_markov_oracle(double k_s, double dt, double t_end);

/// Information gained from reacting pairs up to t, evaluated as
/// (1/2) int_{exp(-k_s t)}^{1} s_I(u / (1 + u)) du by composite Simpson.
double jh_information_gain(double t, double k_s);

/// Limit of jh_information_gain as t -> infinity.
double jh_information_gain_limit();

} // namespace radpair::oracle
