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

#include "doctest.h"

#include "radpair/master_equation.hpp"
#include "radpair/oracle.hpp"
#include "test_support.hpp"

using namespace radpair;
using radpair::testing::max_abs;

namespace {

// d/dt of the closed forms, differentiated by hand.
ComplexMatrix jh_closed_form_derivative(double t, double k)
{
    const double x = std::exp(-k * t);
    ComplexMatrix m(2, 2);
    m << -0.5 * k * x, -0.5 * k * x, -0.5 * k * x, 0.0;
    return m;
}

ComplexMatrix kominis_closed_form_derivative(double t, double k)
{
    const double y = std::exp(-0.5 * k * t);
    ComplexMatrix m(2, 2);
    m << 0.0, -0.25 * k * y, -0.25 * k * y, 0.0;
    return m;
}

// Single-channel Jones-Hore right-hand side, -k rho + k Q_T rho Q_T, written
// entrywise for the 2x2 S/T basis.
ComplexMatrix jh_single_channel(const ComplexMatrix& rho, double k)
{
    ComplexMatrix out = -k * rho;
    out(1, 1) += k * rho(1, 1);
    return out;
}

// Kominis dephasing for H = 0, k_T = 0 written entrywise: only the S/T
// coherences decay, at rate k/2.
ComplexMatrix kominis_single_channel(const ComplexMatrix& rho, double k)
{
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    out(0, 1) = -0.5 * k * rho(0, 1);
    out(1, 0) = -0.5 * k * rho(1, 0);
    return out;
}

double normalized_purity(double t)
{
    const ComplexMatrix rho = oracle::jh_closed_form(t, 1.0).mat;
    const double tr = rho.trace().real();
    return (rho * rho).trace().real() / (tr * tr);
}

} // namespace

TEST_CASE("jones-hore closed form: values")
{
    const ComplexMatrix start = oracle::jh_closed_form(0.0, 1.0).mat;
    CHECK(max_abs(start - ComplexMatrix::Constant(2, 2, 0.5)) == 0.0);

    const ComplexMatrix late = oracle::jh_closed_form(60.0, 1.0).mat;
    ComplexMatrix locked = ComplexMatrix::Zero(2, 2);
    locked(1, 1) = 0.5;
    CHECK(max_abs(late - locked) < 1e-20);

    for (double t : {0.0, 0.3, 1.0, 4.0}) {
        for (double k : {0.5, 1.0, 2.0})
            CHECK(oracle::jh_closed_form(t, k).trace() == doctest::Approx(0.5 * (1 + std::exp(-k * t))).epsilon(1e-15));
    }
}

TEST_CASE("jones-hore closed form solves the single-channel equation")
{
    for (double k : {0.5, 1.0, 3.0}) {
        for (double t : {0.0, 0.1, 0.7, 2.0, 9.0}) {
            const ComplexMatrix rho = oracle::jh_closed_form(t, k).mat;
            CHECK(max_abs(jh_closed_form_derivative(t, k) - jh_single_channel(rho, k)) < 1e-15);
        }
    }
}

TEST_CASE("kominis closed form solves the dephasing equation")
{
    for (double k : {0.5, 1.0, 3.0}) {
        for (double t : {0.0, 0.1, 0.7, 2.0, 9.0}) {
            const ComplexMatrix rho = oracle::kominis_closed_form(t, k).mat;
            CHECK(max_abs(kominis_closed_form_derivative(t, k) - kominis_single_channel(rho, k)) < 1e-15);
            CHECK(rho.trace().real() == 1.0);
            const double purity = (rho * rho).trace().real();
            CHECK(purity == doctest::Approx(0.5 + 0.5 * std::exp(-k * t)).epsilon(1e-14));
        }
    }
    ComplexMatrix mixed = ComplexMatrix::Identity(2, 2) * 0.5;
    CHECK(max_abs(oracle::kominis_closed_form(80.0, 1.0).mat - mixed) < 1e-17);
}

TEST_CASE("closed forms satisfy the master-equation operators under central differences")
{
    const SpinSpace space = st_space();
    const Hamiltonian h = Hamiltonian::zero(2);
    const double step = 1e-6;
    for (double t : {0.05, 0.5, 1.0, 3.0, 8.0}) {
        const ComplexMatrix djh =
            (oracle::jh_closed_form(t + step, 1.0).mat - oracle::jh_closed_form(t - step, 1.0).mat) / (2 * step);
        const ComplexMatrix dk = (oracle::kominis_closed_form(t + step, 1.0).mat -
                                  oracle::kominis_closed_form(t - step, 1.0).mat) /
                                 (2 * step);
        CHECK(max_abs(djh - jones_hore_rhs(space, oracle::jh_closed_form(t, 1.0).mat, h, 1.0, 0.0)) < 1e-6);
        CHECK(max_abs(dk - kominis_rhs(space, oracle::kominis_closed_form(t, 1.0).mat, h, 1.0, 0.0)) < 1e-6);
    }
}

TEST_CASE("normalized purity of the jones-hore solution is minimal at ln 3")
{
    // (1 + 3x^2)/(1 + x)^2 with x = e^{-t}: derivative vanishes at x = 1/3.
    CHECK(normalized_purity(std::log(3.0)) == doctest::Approx(0.75).epsilon(1e-15));

    double lo = 0.0, hi = 5.0;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = hi - phi * (hi - lo);
        const double b = lo + phi * (hi - lo);
        if (normalized_purity(a) < normalized_purity(b))
            hi = b;
        else
            lo = a;
    }
    // The objective is flat to second order, so the bracket stalls near sqrt(eps).
    CHECK(std::abs(0.5 * (lo + hi) - std::log(3.0)) < 1e-7);
    CHECK(normalized_purity(0.5 * (lo + hi)) - 0.75 < 1e-14);
}

TEST_CASE("the two closed forms agree only at t = 0")
{
    CHECK(max_abs(oracle::jh_closed_form(0, 1).mat - oracle::kominis_closed_form(0, 1).mat) == 0.0);
    for (double t : {1e-3, 0.5, 2.0, 10.0}) {
        const double qs_jh = oracle::jh_closed_form(t, 1).mat(0, 0).real();
        const double qs_k = oracle::kominis_closed_form(t, 1).mat(0, 0).real();
        CHECK(std::abs(qs_jh - qs_k) > 1e-4);
    }
}

TEST_CASE("atom with no detected photon")
{
    const PureState start = oracle::atom_no_photon_state(0.0, 2.0);
    CHECK(std::abs(start.vec(0) - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(start.vec(1) - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(oracle::atom_excited_population(0.0, 2.0) == 0.5);

    const PureState late = oracle::atom_no_photon_state(100.0, 1.0);
    CHECK(std::abs(late.vec(0)) < 1e-20);
    CHECK(std::abs(late.vec(1) - 1.0) < 1e-15);

    const double gamma = 0.8;
    const double t = std::log(4.0) / gamma;
    CHECK(oracle::atom_excited_population(t, gamma) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(std::norm(oracle::atom_no_photon_state(t, gamma).vec(0)) == doctest::Approx(0.2).epsilon(1e-14));

    for (double s : {0.0, 0.4, 3.0})
        CHECK(oracle::atom_no_photon_state(s, 1.3).vec.norm() == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS(oracle::atom_no_photon_state(-1.0, 1.0));
    CHECK_THROWS(oracle::atom_no_photon_state(1.0, 0.0));
}

TEST_CASE("discrete three-branch average")
{
    const double k = 1.0, dt = 1e-4;
    const RhoSeries s = oracle::discrete_markov_oracle(k, dt, 10.0);
    REQUIRE(s.size() == 100001);

    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        worst = std::max(worst, max_abs(s.states[i].mat - oracle::jh_closed_form(s.times[i], k).mat));
    CHECK(worst <= 1e-3);
    CHECK(worst > 0.0); // O(dt) bias is real, not a copy of the closed form

    for (std::size_t i = 1; i < s.size(); ++i) {
        CHECK(s.states[i].mat(1, 1) == s.states[0].mat(1, 1));
        const double drop = s.states[i - 1].trace() - s.states[i].trace();
        CHECK(drop == doctest::Approx(k * dt * s.states[i - 1].mat(0, 0).real()).epsilon(1e-9));
        if (i > 50)
            break;
    }
    CHECK_THROWS(oracle::discrete_markov_oracle(1.0, 2e-3, 1.0));
}

TEST_CASE("information gain quadrature oracle")
{
    // Reference values from a 30-digit mpmath quadrature of
    // (1/2) int s_I(u/(1+u)) du.
    CHECK(oracle::jh_information_gain_limit() == doctest::Approx(0.2819136638478887).epsilon(1e-9));
    CHECK(oracle::jh_information_gain(std::log(3.0), 1.0) == doctest::Approx(0.2195656606917720).epsilon(1e-9));
    CHECK(oracle::jh_information_gain(1.0, 1.0) == doctest::Approx(0.2096766741915802).epsilon(1e-9));
    CHECK(oracle::jh_information_gain(0.0, 1.0) == 0.0);
    // time rescales with k
    CHECK(oracle::jh_information_gain(0.5, 2.0) == doctest::Approx(oracle::jh_information_gain(1.0, 1.0)));
}
