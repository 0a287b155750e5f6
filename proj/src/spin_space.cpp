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

#include "radpair/spin_space.hpp"

#include <cmath>
#include <string>

#include "radpair/errors.hpp"

namespace radpair {

namespace {

constexpr double kHermitianTolerance = 1e-12;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

void require_two_level(const SpinSpace& space, const char* what)
{
    if (space.dim != 2)
        throw ConfigError(std::string(what) + " requires the two-level S/T space, got dim " +
                          std::to_string(space.dim));
}

} // namespace

DensityMatrix PureState::density() const
{
    if (!alive)
        return {ComplexMatrix::Zero(vec.size(), vec.size())};
    return {vec * vec.adjoint()};
}

Hamiltonian::Hamiltonian(ComplexMatrix mat) : mat_(std::move(mat))
{
    if (mat_.rows() != mat_.cols())
        throw ConfigError("hamiltonian must be square");
    if (hermiticity_defect(mat_) > kHermitianTolerance)
        throw ConfigError("hamiltonian is not Hermitian");
}

Hamiltonian Hamiltonian::zero(int dim)
{
    return Hamiltonian(ComplexMatrix::Zero(dim, dim));
}

SpinSpace st_space()
{
    SpinSpace space;
    space.dim = 2;
    space.q_singlet = ComplexMatrix::Zero(2, 2);
    space.q_singlet(0, 0) = 1.0;
    space.q_triplet = ComplexMatrix::Zero(2, 2);
    space.q_triplet(1, 1) = 1.0;
    space.labels = {"S", "T"};
    return space;
}

SpinSpace radical_pair_space(const std::vector<int>& nuclear_multiplicities)
{
    int nuclear_dim = 1;
    for (int m : nuclear_multiplicities) {
        if (m <= 0)
            throw ConfigError("nuclear multiplicity must be positive, got " + std::to_string(m));
        nuclear_dim *= m;
    }

    ComplexMatrix electron_singlet = ComplexMatrix::Zero(4, 4);
    electron_singlet(0, 0) = 1.0;

    SpinSpace space;
    space.dim = 4 * nuclear_dim;
    space.q_singlet = kron(electron_singlet, ComplexMatrix::Identity(nuclear_dim, nuclear_dim));
    space.q_triplet = ComplexMatrix::Identity(space.dim, space.dim) - space.q_singlet;

    static const char* electron_labels[] = {"S", "T+", "T0", "T-"};
    for (const char* e : electron_labels) {
        for (int n = 0; n < nuclear_dim; ++n) {
            if (nuclear_dim == 1)
                space.labels.emplace_back(e);
            else
                space.labels.push_back(std::string(e) + "|" + std::to_string(n));
        }
    }
    return space;
}

ComplexMatrix electron_st_basis()
{
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix basis = ComplexMatrix::Zero(4, 4);
    // columns: S, T+, T0, T-; rows: uu, ud, du, dd
    basis(1, 0) = r;
    basis(2, 0) = -r;
    basis(0, 1) = 1.0;
    basis(1, 2) = r;
    basis(2, 2) = r;
    basis(3, 3) = 1.0;
    return basis;
}

Hamiltonian mixing_hamiltonian(const SpinSpace& space, double omega)
{
    require_two_level(space, "mixing_hamiltonian");
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 1) = 0.5 * omega;
    h(1, 0) = 0.5 * omega;
    return Hamiltonian(std::move(h));
}

PureState coherent_st_state(const SpinSpace& space)
{
    require_two_level(space, "coherent_st_state");
    const double r = 1.0 / std::sqrt(2.0);
    ComplexVector v(2);
    v << r, r;
    return {v, true};
}

PureState singlet_state(const SpinSpace& space)
{
    require_two_level(space, "singlet_state");
    ComplexVector v(2);
    v << 1.0, 0.0;
    return {v, true};
}

PureState triplet_state(const SpinSpace& space)
{
    require_two_level(space, "triplet_state");
    ComplexVector v(2);
    v << 0.0, 1.0;
    return {v, true};
}

double expectation(const ComplexMatrix& op, const DensityMatrix& rho)
{
    if (op.rows() != rho.mat.rows() || op.cols() != rho.mat.cols())
        throw ConfigError("expectation: operator is " + std::to_string(op.rows()) + "x" +
                          std::to_string(op.cols()) + " but state is " +
                          std::to_string(rho.mat.rows()) + "x" + std::to_string(rho.mat.cols()));
    // Tr{AB} = sum_ij A_ij B_ji
    const Complex value = op.cwiseProduct(rho.mat.transpose()).sum();
    if (std::abs(value.imag()) > 1e-10)
        throw NumericalError(0.0, "expectation has imaginary residue " + std::to_string(value.imag()));
    return value.real();
}

double expectation(const ComplexMatrix& op, const PureState& psi)
{
    if (!psi.alive)
        return 0.0;
    if (op.cols() != psi.vec.size())
        throw ConfigError("expectation: operator and state dimensions differ");
    return psi.vec.dot(op * psi.vec).real();
}

double hermiticity_defect(const ComplexMatrix& m)
{
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const ComplexMatrix& m)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

ComplexMatrix hermitian_part(const ComplexMatrix& m)
{
    return 0.5 * (m + m.adjoint());
}

} // namespace radpair
