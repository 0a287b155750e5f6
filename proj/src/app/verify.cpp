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

#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "radpair/app/commands.hpp"
#include "radpair/diagnostics.hpp"
#include "radpair/ensemble.hpp"
#include "radpair/errors.hpp"
#include "radpair/oracle.hpp"

namespace radpair::app {

namespace {

struct Check {
    std::string name;
    std::function<std::string()> run; // empty string: pass; otherwise the failure reason
};

std::string fmt(double v)
{
    std::ostringstream os;
    os << std::setprecision(4) << std::scientific << v;
    return os.str();
}

double sup_distance(const RhoSeries& a, const std::function<DensityMatrix(double)>& exact)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, (a.states[i].mat - exact(a.times[i]).mat).cwiseAbs().maxCoeff());
    return worst;
}

std::string closed_forms_satisfy_generators()
{
    const SpinSpace space = st_space();
    const Hamiltonian h = Hamiltonian::zero(2);
    const double step = 1e-6;
    double worst = 0.0;
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const ComplexMatrix djh =
            (oracle::jh_closed_form(t + step, 1.0).mat - oracle::jh_closed_form(t - step, 1.0).mat) / (2 * step);
        const ComplexMatrix dk = (oracle::kominis_closed_form(t + step, 1.0).mat -
                                  oracle::kominis_closed_form(t - step, 1.0).mat) /
                                 (2 * step);
        worst = std::max(worst, (djh - jones_hore_rhs(space, oracle::jh_closed_form(t, 1.0).mat, h, 1, 0))
                                    .cwiseAbs()
                                    .maxCoeff());
        worst = std::max(worst, (dk - kominis_rhs(space, oracle::kominis_closed_form(t, 1.0).mat, h, 1, 0))
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    return worst <= 1e-6 ? "" : "derivative mismatch " + fmt(worst);
}

std::string unraveling_identity()
{
    const SpinSpace space = st_space();
    const Hamiltonian h = Hamiltonian::zero(2);
    std::mt19937_64 gen(2024);
    std::normal_distribution<double> normal;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        ComplexMatrix a(2, 2);
        for (int i = 0; i < 4; ++i)
            a(i / 2, i % 2) = Complex(normal(gen), normal(gen));
        const ComplexMatrix rho = hermitian_part(a);
        const double k_s = 1.0 + std::abs(normal(gen));
        const double k_t = std::abs(normal(gen));
        const double dt = 1e-3;
        const double lambda = 0.5 * (k_s + k_t);
        const ComplexMatrix& qs = space.q_singlet;
        const ComplexMatrix& qt = space.q_triplet;
        const ComplexMatrix averaged = (1 - lambda * dt) * rho + lambda * dt * (qs * rho * qs + qt * rho * qt);
        const ComplexMatrix euler = rho + dt * kominis_rhs(space, rho, h, k_s, k_t);
        const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
        worst = std::max(worst, (averaged - euler).cwiseAbs().maxCoeff() / scale);
    }
    return worst <= 1e-14 ? "" : "one-step maps differ by " + fmt(worst);
}

} // namespace

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err)
{
    const SpinSpace space = st_space();
    std::vector<Check> checks;

    checks.push_back({"closed forms satisfy their master equations", closed_forms_satisfy_generators});

    checks.push_back({"jones-hore integrator matches closed form", [] {
                          const RhoSeries s = evolve(desk_scenario(Theory::JonesHore));
                          const double d = sup_distance(s, [](double t) { return oracle::jh_closed_form(t, 1.0); });
                          return d <= 1e-6 ? std::string() : "sup error " + fmt(d);
                      }});

    checks.push_back({"kominis integrator matches closed form and preserves trace", [&] {
                          const Scenario sc = desk_scenario(Theory::Kominis);
                          const Hamiltonian h = Hamiltonian::zero(2);
                          const double sign = options.inject_kominis_sign_fault ? -1.0 : 1.0;
                          const Generator rhs = [&](const ComplexMatrix& rho) {
                              const ComplexMatrix& qs = sc.space.q_singlet;
                              return ComplexMatrix(-0.5 * (qs * rho + rho * qs - sign * 2.0 * qs * rho * qs));
                          };
                          IntegrationChecks ic;
                          ic.trace_preserving = true;
                          try {
                              const RhoSeries s = integrate(rhs, sc.rho0, sc.dt, sc.steps(), ic);
                              const double d =
                                  sup_distance(s, [](double t) { return oracle::kominis_closed_form(t, 1.0); });
                              return d <= 1e-6 ? std::string() : "sup error " + fmt(d);
                          } catch (const NumericalError& e) {
                              return std::string(e.what());
                          }
                      }});

    checks.push_back({"discrete three-branch average matches closed form", [] {
                          const RhoSeries s = oracle::discrete_markov_oracle(1.0, 1e-4, 10.0);
                          const double d = sup_distance(s, [](double t) { return oracle::jh_closed_form(t, 1.0); });
                          return d <= 1e-3 ? std::string() : "sup error " + fmt(d);
                      }});

    checks.push_back({"projective unraveling reproduces the kominis dissipator", unraveling_identity});

    checks.push_back({"information gain matches quadrature oracle", [&] {
                          const RhoSeries s = evolve(desk_scenario(Theory::JonesHore, 1.0, 20.0));
                          const double gain = information_gain(s, space, 1.0).back();
                          const double d = std::abs(gain - oracle::jh_information_gain_limit());
                          return d <= 1e-4 ? std::string() : "difference " + fmt(d);
                      }});

    for (Theory theory : {Theory::JonesHore, Theory::Kominis}) {
        checks.push_back({std::string(to_string(theory)) + " ensemble (n=2000) matches master equation", [=] {
                              EnsembleConfig cfg;
                              cfg.scenario = desk_scenario(theory);
                              cfg.n_traj = 2000;
                              cfg.master_seed = 11;
                              const RhoSeries avg = ensemble_average(cfg, Conditioning::All, options.threads);
                              const RhoSeries exact = evolve(cfg.scenario);
                              double worst = 0.0;
                              for (std::size_t i = 0; i < avg.size(); ++i) {
                                  const auto a = basic_observables(avg.states[i], cfg.scenario.space);
                                  const auto b = basic_observables(exact.states[i], cfg.scenario.space);
                                  worst = std::max({worst, std::abs(a.qs - b.qs), std::abs(a.trace - b.trace)});
                              }
                              const double bound = 3.0 * 0.5 / std::sqrt(2000.0);
                              return worst <= bound ? std::string() : "sup error " + fmt(worst);
                          }});
    }

    checks.push_back({"ensemble is independent of thread count", [] {
                          EnsembleConfig cfg;
                          cfg.scenario = desk_scenario(Theory::Kominis, 1.0, 2.0);
                          cfg.n_traj = 200;
                          cfg.master_seed = 5;
                          cfg.recombination_enabled = true;
                          const EnsembleResult one = accumulate_ensemble(cfg, 1);
                          const EnsembleResult many = accumulate_ensemble(cfg, 4);
                          for (std::size_t i = 0; i < one.rho_sum.size(); ++i)
                              if (one.rho_sum[i] != many.rho_sum[i] || one.alive[i] != many.alive[i])
                                  return std::string("sums differ at grid index ") + std::to_string(i);
                          return one.events == many.events ? std::string() : std::string("event logs differ");
                      }});

    checks.push_back({"oversized step is rejected", [] {
                          try {
                              desk_scenario(Theory::JonesHore, 1.0, 10.0, 0.2).validate();
                          } catch (const ConfigError&) {
                              return std::string();
                          }
                          return std::string("dt = 0.2 accepted");
                      }});

    bool all = true;
    out << std::left << std::setw(64) << "check" << "result\n";
    for (const Check& c : checks) {
        std::string reason;
        try {
            reason = c.run();
        } catch (const std::exception& e) {
            reason = e.what();
        }
        const bool pass = reason.empty();
        all = all && pass;
        out << std::setw(64) << c.name << (pass ? "PASS" : "FAIL: " + reason) << '\n';
    }
    if (!all)
        err << "numeric: verification failed\n";
    return all ? kOk : kNumericError;
}

} // namespace radpair::app
