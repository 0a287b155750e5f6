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

#include <optional>
#include <vector>

#include "radpair/master_equation.hpp"
#include "radpair/spin_space.hpp"

namespace radpair {

/// Normalized quantities are reported only while Tr{rho} is at least this.
inline constexpr double kTraceThreshold = 1e-6;

struct BasicObservables {
    double qs = 0.0;
    double qt = 0.0;
    double trace = 0.0;
    double purity = 0.0;
};

struct NormalizedObservables {
    double qs_norm = 0.0;
    double qt_norm = 0.0;
    double purity_norm = 0.0;
};

/// One output row. Entropies and information are in nats; empty optionals
/// are written as NA.
struct DiagnosticRow {
    double t = 0.0;
    std::optional<double> qs, qt, trace, purity;
    std::optional<double> qs_norm, qt_norm, purity_norm;
    std::optional<double> svn;
    std::optional<double> p_s, s_i;
    std::optional<double> info_gain;
};

/// Tr{Q_S rho}, Tr{Q_T rho}, Tr{rho}, Tr{rho^2}.
BasicObservables basic_observables(const DensityMatrix& rho, const SpinSpace& space);

/// (qs, qt, purity) divided by (trace, trace, trace^2); empty when the trace
/// is below kTraceThreshold.
std::optional<NormalizedObservables> normalized_observables(const DensityMatrix& rho,
                                                            const SpinSpace& space);

/// -sum l ln l over the eigenvalues of a normalized density matrix.
/// Eigenvalues in [-1e-9, 0) count as zero; anything lower throws.
double von_neumann_entropy(const DensityMatrix& rho);

/// -p ln p - (1-p) ln(1-p), zero at the endpoints.
double binary_information(double p_s);

/// Cumulative trapezoid of k_s Tr{Q_S rho} s_I(p_S) with p_S = Tr{Q_S rho_nr}.
/// Only Jones-Hore series are accepted.
std::vector<double> information_gain(const RhoSeries& series, const SpinSpace& space, double k_s);

/// Evaluates every column on every grid point of the series. `with_info_gain`
/// selects whether the cumulative information column is filled.
std::vector<DiagnosticRow> diagnose(const RhoSeries& series, const SpinSpace& space, double k_s,
                                    bool with_info_gain);

} // namespace radpair
