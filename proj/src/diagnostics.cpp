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

#include "radpair/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radpair/errors.hpp"

namespace radpair {

BasicObservables basic_observables(const DensityMatrix& rho, const SpinSpace& space)
{
    BasicObservables out;
    out.qs = expectation(space.q_singlet, rho);
    out.qt = expectation(space.q_triplet, rho);
    out.trace = rho.trace();
    out.purity = expectation(rho.mat, rho);
    return out;
}

std::optional<NormalizedObservables> normalized_observables(const DensityMatrix& rho,
                                                            const SpinSpace& space)
{
    const BasicObservables b = basic_observables(rho, space);
    if (b.trace < kTraceThreshold)
        return std::nullopt;
    return NormalizedObservables{b.qs / b.trace, b.qt / b.trace, b.purity / (b.trace * b.trace)};
}

double von_neumann_entropy(const DensityMatrix& rho)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(rho.mat),
                                                        Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double l = solver.eigenvalues()(i);
        if (l < -1e-9)
            throw NumericalError(0.0, "entropy of a matrix with eigenvalue " + std::to_string(l));
        if (l > 0.0)
            s -= l * std::log(l);
    }
    return s;
}

double binary_information(double p_s)
{
    if (p_s < -1e-12 || p_s > 1.0 + 1e-12 || std::isnan(p_s))
        throw ConfigError("binary_information: probability out of range: " + std::to_string(p_s));
    if (p_s <= 0.0 || p_s >= 1.0)
        return 0.0;
    const double q = 1.0 - p_s;
    return -p_s * std::log(p_s) - q * std::log(q);
}

namespace {

// k_s Tr{Q_S rho} s_I(p_S); zero once the surviving population is gone.
double information_flux(const DensityMatrix& rho, const SpinSpace& space, double k_s)
{
    const double trace = rho.trace();
    if (trace < kTraceThreshold)
        return 0.0;
    const double qs = expectation(space.q_singlet, rho);
    const double p_s = std::clamp(qs / trace, 0.0, 1.0);
    return k_s * std::max(qs, 0.0) * binary_information(p_s);
}

} // namespace

std::vector<double> information_gain(const RhoSeries& series, const SpinSpace& space, double k_s)
{
    if (series.theory != Theory::JonesHore)
        throw ConfigError("information gain is defined for Jones-Hore series only");
    std::vector<double> gain(series.size(), 0.0);
    if (series.size() == 0)
        return gain;
    double previous = information_flux(series.states[0], space, k_s);
    for (std::size_t i = 1; i < series.size(); ++i) {
        const double current = information_flux(series.states[i], space, k_s);
        gain[i] = gain[i - 1] + 0.5 * (series.times[i] - series.times[i - 1]) * (previous + current);
        previous = current;
    }
    return gain;
}

std::vector<DiagnosticRow> diagnose(const RhoSeries& series, const SpinSpace& space, double k_s,
                                    bool with_info_gain)
{
    std::vector<double> gain;
    if (with_info_gain)
        gain = information_gain(series, space, k_s);

    std::vector<DiagnosticRow> rows(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        DiagnosticRow& row = rows[i];
        row.t = series.times[i];
        if (!series.defined.empty() && !series.defined[i])
            continue;
        const DensityMatrix& rho = series.states[i];
        const BasicObservables b = basic_observables(rho, space);
        row.qs = b.qs;
        row.qt = b.qt;
        row.trace = b.trace;
        row.purity = b.purity;
        if (auto n = normalized_observables(rho, space)) {
            row.qs_norm = n->qs_norm;
            row.qt_norm = n->qt_norm;
            row.purity_norm = n->purity_norm;
            try {
                row.svn = von_neumann_entropy({rho.mat / b.trace});
            } catch (const NumericalError& e) {
                throw NumericalError(row.t, std::string(e.what()) + " at t=" + std::to_string(row.t));
            }
            row.p_s = std::clamp(n->qs_norm, 0.0, 1.0);
            row.s_i = binary_information(*row.p_s);
        }
        if (with_info_gain)
            row.info_gain = gain[i];
    }
    return rows;
}

} // namespace radpair
