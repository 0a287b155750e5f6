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

#include "radpair/oracle.hpp"

#include <cmath>

#include "radpair/errors.hpp"

namespace radpair::oracle {

namespace {

double binary_entropy(double p)
{
    if (p <= 0.0 || p >= 1.0)
        return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

double simpson(double a, double b, int intervals)
{
    if (b <= a)
        return 0.0;
    const auto f = [](double u) { return 0.5 * binary_entropy(u / (1.0 + u)); };
    const double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i)
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

} // namespace

DensityMatrix jh_closed_form(double t, double k_s)
{
    const double x = std::exp(-k_s * t);
    ComplexMatrix m(2, 2);
    m << 0.5 * x, 0.5 * x, 0.5 * x, 0.5;
    return {m};
}

DensityMatrix kominis_closed_form(double t, double k_s)
{
    const double y = std::exp(-0.5 * k_s * t);
    ComplexMatrix m(2, 2);
    m << 0.5, 0.5 * y, 0.5 * y, 0.5;
    return {m};
}

PureState atom_no_photon_state(double t, double gamma)
{
    if (t < 0.0 || !(gamma > 0.0))
        throw ConfigError("atom_no_photon_state needs t >= 0 and gamma > 0");
    const double a = std::exp(-0.5 * gamma * t);
    const double norm = std::sqrt(1.0 + a * a);
    ComplexVector v(2);
    v << a / norm, 1.0 / norm;
    return {v, true};
}

double atom_excited_population(double t, double gamma)
{
    const double x = std::exp(-gamma * t);
    return x / (1.0 + x);
}

RhoSeries discrete_markov_oracle(double k_s, double dt, double t_end)
{
    if (k_s * dt > 1e-3 + 1e-15)
        throw ConfigError("discrete_markov_oracle requires k_s*dt <= 1e-3");
    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    const double p = k_s * dt;

    RhoSeries series;
    series.theory = Theory::JonesHore;
    ComplexMatrix rho = jh_closed_form(0.0, k_s).mat;
    series.times.push_back(0.0);
    series.states.push_back({rho});
    for (std::size_t i = 1; i <= steps; ++i) {
        // Q_T rho Q_T keeps only the TT entry, so (1 - p) + p leaves it as is.
        ComplexMatrix next = (1.0 - p) * rho;
        next(1, 1) = rho(1, 1);
        rho = next;
        series.times.push_back(static_cast<double>(i) * dt);
        series.states.push_back({rho});
    }
    series.defined.assign(series.times.size(), true);
    return series;
}

double jh_information_gain(double t, double k_s)
{
    if (t <= 0.0)
        return 0.0;
    return simpson(std::exp(-k_s * t), 1.0, 200000);
}

double jh_information_gain_limit()
{
    return simpson(0.0, 1.0, 200000);
}

} // namespace radpair::oracle
