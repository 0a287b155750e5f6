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

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "radpair/diagnostics.hpp"
#include "radpair/trajectory.hpp"

namespace radpair::app {

/// Full diagnostic schema, in output order.
inline constexpr std::string_view kDiagnosticHeader =
    "t,qs,qt,trace,purity,qs_norm,qt_norm,purity_norm,svn,p_s,s_i,info_gain";

inline constexpr std::size_t kMaxRows = 2001;

/// 12 significant digits, or NA.
std::string format_value(std::optional<double> value);

/// Grid indices kept when writing n_points rows: stride ceil((n-1)/2000),
/// with the final point always retained.
std::vector<std::size_t> decimate(std::size_t n_points, std::size_t max_rows = kMaxRows);

/// Looks up a column of the diagnostic schema by name.
std::optional<double> column(const DiagnosticRow& row, std::string_view name);

/// Writes the selected columns (header first) for the decimated rows.
void write_rows(std::ostream& out, const std::vector<DiagnosticRow>& rows,
                const std::vector<std::string>& columns);

/// Writes the full diagnostic schema.
void write_diagnostics(std::ostream& out, const std::vector<DiagnosticRow>& rows);

/// traj_index,time,kind,channel
void write_events(std::ostream& out, const std::vector<std::vector<TrajectoryEvent>>& events);

} // namespace radpair::app
