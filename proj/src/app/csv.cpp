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

#include "radpair/app/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace radpair::app {

std::string format_value(std::optional<double> value)
{
    if (!value)
        return "NA";
    double v = *value;
    if (v == 0.0)
        v = 0.0; // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::size_t> decimate(std::size_t n_points, std::size_t max_rows)
{
    std::vector<std::size_t> keep;
    if (n_points == 0)
        return keep;
    const std::size_t last = n_points - 1;
    const std::size_t intervals = max_rows - 1;
    const std::size_t stride = last == 0 ? 1 : (last + intervals - 1) / intervals;
    for (std::size_t i = 0; i <= last; i += stride)
        keep.push_back(i);
    if (keep.back() != last)
        keep.push_back(last);
    return keep;
}

std::optional<double> column(const DiagnosticRow& row, std::string_view name)
{
    if (name == "t")
        return row.t;
    if (name == "qs")
        return row.qs;
    if (name == "qt")
        return row.qt;
    if (name == "trace")
        return row.trace;
    if (name == "purity")
        return row.purity;
    if (name == "qs_norm")
        return row.qs_norm;
    if (name == "qt_norm")
        return row.qt_norm;
    if (name == "purity_norm")
        return row.purity_norm;
    if (name == "svn")
        return row.svn;
    if (name == "p_s")
        return row.p_s;
    if (name == "s_i")
        return row.s_i;
    if (name == "info_gain")
        return row.info_gain;
    throw std::invalid_argument("unknown column " + std::string(name));
}

void write_rows(std::ostream& out, const std::vector<DiagnosticRow>& rows,
                const std::vector<std::string>& columns)
{
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << (c ? "," : "") << columns[c];
    out << '\n';
    for (std::size_t i : decimate(rows.size())) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << (c ? "," : "") << format_value(column(rows[i], columns[c]));
        out << '\n';
    }
}

void write_diagnostics(std::ostream& out, const std::vector<DiagnosticRow>& rows)
{
    write_rows(out, rows,
               {"t", "qs", "qt", "trace", "purity", "qs_norm", "qt_norm", "purity_norm", "svn",
                "p_s", "s_i", "info_gain"});
}

void write_events(std::ostream& out, const std::vector<std::vector<TrajectoryEvent>>& events)
{
    out << "traj_index,time,kind,channel\n";
    for (std::size_t index = 0; index < events.size(); ++index) {
        for (const TrajectoryEvent& e : events[index]) {
            out << index << ',' << format_value(e.time) << ',' << to_string(e.kind) << ','
                << (e.channel ? std::string(to_string(*e.channel)) : std::string("NA")) << '\n';
        }
    }
}

} // namespace radpair::app
