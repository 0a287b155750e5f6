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

#include <ostream>
#include <string>
#include <vector>

#include "radpair/app/run_config.hpp"
#include "radpair/diagnostics.hpp"
#include "radpair/trajectory.hpp"

namespace radpair::app {

enum ExitCode : int { kOk = 0, kConfigError = 1, kNumericError = 2 };

struct CommandOptions {
    std::string out;    // empty: write to the default stream
    std::string events; // trajectories only
    int threads = 0;    // 0: OpenMP default; never changes results
    bool quiet = false;
};

/// Master-equation run with diagnostics on every grid point.
std::vector<DiagnosticRow> run_evolve(const RunConfig& config);

struct TrajectoryRun {
    std::vector<DiagnosticRow> rows;
    std::vector<std::vector<TrajectoryEvent>> events;
};

/// Ensemble run. Throws EnsembleError when non-reacted conditioning empties
/// the ensemble before t_end.
TrajectoryRun run_trajectories(const RunConfig& config, int threads);

int cmd_evolve(const std::string& config_path, const CommandOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_trajectories(const std::string& config_path, const CommandOptions& options,
                     std::ostream& out, std::ostream& err);

/// Writes the figure's panel CSVs (and the configs that produced them) into
/// the directory options.out (default: current directory).
int cmd_figure(int id, const CommandOptions& options, std::ostream& log, std::ostream& err);

struct VerifyOptions {
    int threads = 0;
    // Flip the sign of the Q_S rho Q_S term in the Kominis generator; the
    // trace-preservation check must then fail.
    bool inject_kominis_sign_fault = false;
};

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

} // namespace radpair::app
