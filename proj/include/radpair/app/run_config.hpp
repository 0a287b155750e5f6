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
#include <string>

#include <nlohmann/json.hpp>

#include "radpair/ensemble.hpp"
#include "radpair/master_equation.hpp"

namespace radpair::app {

enum class InitialState { CoherentST, Singlet, Triplet };

/// JSON run configuration. Keys: theory ("kominis" | "jones-hore"), k_s,
/// k_t, omega, initial ("coherent-st" | "singlet" | "triplet"), t_end, dt,
/// n_traj, seed, recombination ("on" | "off"), conditioning ("all" |
/// "non-reacted"). Only theory is required; unknown keys are rejected.
struct RunConfig {
    Theory theory = Theory::JonesHore;
    double k_s = 1.0;
    double k_t = 0.0;
    double omega = 0.0;
    InitialState initial = InitialState::CoherentST;
    double t_end = 10.0;
    double dt = 1e-3;
    std::uint64_t n_traj = 0;
    std::uint64_t seed = 0;
    bool recombination = false;
    Conditioning conditioning = Conditioning::All;

    static RunConfig from_json(const nlohmann::json& doc);
    static RunConfig load(const std::string& path);
    nlohmann::json to_json() const;

    Scenario scenario() const;
    EnsembleConfig ensemble() const;
};

} // namespace radpair::app
