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

#include "radpair/master_equation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radpair/errors.hpp"

namespace radpair {

namespace {

void require_shapes(const SpinSpace& space, const ComplexMatrix& rho, const Hamiltonian& h)
{
    if (rho.rows() != space.dim || rho.cols() != space.dim || h.dim() != space.dim)
        throw ConfigError("master equation: rho, H and projectors must share dimension " +
                          std::to_string(space.dim));
}

ComplexMatrix commutator_term(const ComplexMatrix& rho, const Hamiltonian& h)
{
    if (h.is_zero())
        return ComplexMatrix::Zero(rho.rows(), rho.cols());
    const Complex minus_i(0.0, -1.0);
    return minus_i * (h.mat() * rho - rho * h.mat());
}

std::string format_failure(double t, const std::string& what, double value)
{
    std::ostringstream os;
    os.precision(12);
    os << what << " at t=" << t << " (value " << value << ")";
    return os.str();
}

} // namespace

std::string_view to_string(Theory theory)
{
    return theory == Theory::Kominis ? "kominis" : "jones-hore";
}

void Scenario::validate() const
{
    if (!(dt > 0.0))
        throw ConfigError("dt must be positive");
    if (!(t_end > 0.0))
        throw ConfigError("t_end must be positive");
    if (dt > t_end)
        throw ConfigError("dt must not exceed t_end");
    if (k_s < 0.0 || k_t < 0.0)
        throw ConfigError("recombination rates must be non-negative");
    if (dt * std::max(k_s, k_t) > 0.1 + 1e-15)
        throw ConfigError("step-size bound violated: dt*max(k_s,k_t) = " +
                          std::to_string(dt * std::max(k_s, k_t)) + " > 0.1");
    if (rho0.dim() != space.dim || hamiltonian.dim() != space.dim)
        throw ConfigError("rho0, hamiltonian and space dimensions differ");
    if (hermiticity_defect(rho0.mat) > 1e-10 || min_eigenvalue(rho0.mat) < -1e-9 ||
        rho0.trace() > 1.0 + 1e-9)
        throw ConfigError("rho0 is not a density matrix");
}

std::size_t Scenario::steps() const
{
    return static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
}

Scenario desk_scenario(Theory theory, double k_s, double t_end, double dt)
{
    Scenario s;
    s.space = st_space();
    s.theory = theory;
    s.hamiltonian = Hamiltonian::zero(2);
    s.k_s = k_s;
    s.k_t = 0.0;
    s.psi0 = coherent_st_state(s.space);
    s.rho0 = s.psi0->density();
    s.t_end = t_end;
    s.dt = dt;
    return s;
}

ComplexMatrix kominis_rhs(const SpinSpace& space, const ComplexMatrix& rho, const Hamiltonian& h,
                          double k_s, double k_t)
{
    require_shapes(space, rho, h);
    const ComplexMatrix& qs = space.q_singlet;
    const ComplexMatrix qs_rho = qs * rho;
    const ComplexMatrix rho_qs = rho * qs;
    return commutator_term(rho, h) - 0.5 * (k_s + k_t) * (qs_rho + rho_qs - 2.0 * qs_rho * qs);
}

ComplexMatrix jones_hore_rhs(const SpinSpace& space, const ComplexMatrix& rho, const Hamiltonian& h,
                             double k_s, double k_t)
{
    require_shapes(space, rho, h);
    const ComplexMatrix& qs = space.q_singlet;
    const ComplexMatrix& qt = space.q_triplet;
    ComplexMatrix out = commutator_term(rho, h) - (k_s + k_t) * rho + k_s * (qt * rho * qt);
    if (k_t != 0.0)
        out += k_t * (qs * rho * qs);
    return out;
}

RhoSeries integrate(const Generator& rhs, const DensityMatrix& rho0, double dt, std::size_t steps,
                    const IntegrationChecks& checks)
{
    RhoSeries series;
    series.times.reserve(steps + 1);
    series.states.reserve(steps + 1);

    const double trace0 = rho0.trace();
    ComplexMatrix rho = rho0.mat;
    double previous_trace = trace0;

    series.times.push_back(0.0);
    series.states.push_back({rho});
    for (std::size_t i = 1; i <= steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        const ComplexMatrix k1 = rhs(rho);
        const ComplexMatrix k2 = rhs(rho + (0.5 * dt) * k1);
        const ComplexMatrix k3 = rhs(rho + (0.5 * dt) * k2);
        const ComplexMatrix k4 = rhs(rho + dt * k3);
        ComplexMatrix next = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const ComplexMatrix sym = hermitian_part(next);
        const double correction = (sym - next).cwiseAbs().maxCoeff();
        if (!(correction <= checks.max_hermitian_correction))
            throw NumericalError(t, format_failure(t, "hermiticity correction exceeded 1e-8", correction));
        rho = sym;

        const double trace = rho.trace().real();
        if (!std::isfinite(trace))
            throw NumericalError(t, format_failure(t, "non-finite trace", trace));
        if (trace > 1.0 + checks.trace_tolerance)
            throw NumericalError(t, format_failure(t, "trace exceeds 1", trace));
        if (checks.trace_preserving && std::abs(trace - trace0) > checks.trace_tolerance)
            throw NumericalError(t, format_failure(t, "trace not preserved", trace));
        if (!checks.trace_preserving && trace > previous_trace + 1e-12)
            throw NumericalError(t, format_failure(t, "trace increased", trace));
        const double lambda_min = min_eigenvalue(rho);
        if (lambda_min < checks.min_eigenvalue)
            throw NumericalError(t, format_failure(t, "negative eigenvalue", lambda_min));
        previous_trace = trace;

        series.times.push_back(t);
        series.states.push_back({rho});
    }
    series.defined.assign(series.times.size(), true);
    return series;
}

RhoSeries evolve(const Scenario& scenario)
{
    scenario.validate();
    const SpinSpace& space = scenario.space;
    const Hamiltonian& h = scenario.hamiltonian;
    const double k_s = scenario.k_s;
    const double k_t = scenario.k_t;

    IntegrationChecks checks;
    Generator rhs;
    if (scenario.theory == Theory::Kominis) {
        checks.trace_preserving = true;
        rhs = [&](const ComplexMatrix& rho) { return kominis_rhs(space, rho, h, k_s, k_t); };
    } else {
        rhs = [&](const ComplexMatrix& rho) { return jones_hore_rhs(space, rho, h, k_s, k_t); };
    }
    RhoSeries series = integrate(rhs, scenario.rho0, scenario.dt, scenario.steps(), checks);
    series.theory = scenario.theory;
    return series;
}

} // namespace radpair
