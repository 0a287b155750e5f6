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

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace radpair {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Hilbert space of a radical-ion pair together with its singlet/triplet
/// projectors. Q_S + Q_T = I, both Hermitian idempotents.
struct SpinSpace {
    int dim = 0;
    ComplexMatrix q_singlet;
    ComplexMatrix q_triplet;
    std::vector<std::string> labels;
};

/// Spin state of an ensemble. The trace is the surviving population
/// fraction and may decay below one.
struct DensityMatrix {
    ComplexMatrix mat;

    int dim() const { return static_cast<int>(mat.rows()); }
    double trace() const { return mat.trace().real(); }
};

/// Single-molecule state along a trajectory. A recombined molecule carries
/// alive = false and contributes the zero matrix.
struct PureState {
    ComplexVector vec;
    bool alive = true;

    DensityMatrix density() const;
};

/// Magnetic interaction Hamiltonian, angular frequency in units of k_S.
class Hamiltonian {
public:
    explicit Hamiltonian(ComplexMatrix mat);
    static Hamiltonian zero(int dim);

    const ComplexMatrix& mat() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }
    bool is_zero() const { return mat_.isZero(0.0); }

private:
    ComplexMatrix mat_;
};

/// Reduced two-level {|S>, |T>} space with Q_S = diag(1, 0).
SpinSpace st_space();

/// Two electrons plus nuclei of the given multiplicities (2I+1). Electron
/// basis is {|S>, |T+>, |T0>, |T->}, nuclear factors follow in order.
SpinSpace radical_pair_space(const std::vector<int>& nuclear_multiplicities);

/// Change of basis from the product basis {|uu>, |ud>, |du>, |dd>} to
/// {|S>, |T+>, |T0>, |T->}: column j is the j-th singlet/triplet state
/// expressed in product coordinates.
ComplexMatrix electron_st_basis();

/// H = (omega/2)(|S><T| + |T><S|) on the two-level space.
Hamiltonian mixing_hamiltonian(const SpinSpace& space, double omega);

/// (|S> + |T>)/sqrt(2).
PureState coherent_st_state(const SpinSpace& space);
PureState singlet_state(const SpinSpace& space);
PureState triplet_state(const SpinSpace& space);

/// Re Tr{op rho}. Throws ConfigError on shape mismatch and NumericalError if
/// the imaginary residue exceeds 1e-10.
double expectation(const ComplexMatrix& op, const DensityMatrix& rho);

/// <psi|op|psi> for a pure state (0 for a dead one).
double expectation(const ComplexMatrix& op, const PureState& psi);

// Elementary matrix checks shared across modules.
double hermiticity_defect(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);
ComplexMatrix hermitian_part(const ComplexMatrix& m);

} // namespace radpair
