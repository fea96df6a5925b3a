// Copyright 2026 The minent Authors
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
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace minent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Kronecker product a (x) b, first factor most significant.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Product of a list of factor dimensions.
long product(std::span<const int> dims);

/// Largest |M - M^dagger| entry.
double hermiticity_defect(const Matrix& m);

/// Largest entry of |U^dagger U - I|.
double unitarity_defect(const Matrix& u);

/// Largest absolute entry of a - b (sizes must agree).
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Permutation unitary P|i> = |perm[i]>.
Matrix permutation_matrix(std::span<const int> perm);

/// P M P^dagger for the permutation unitary above, without forming P.
Matrix permute_conjugate(const Matrix& m, std::span<const int> perm);

/// Unitary DFT, entries exp(2 pi i j k / n) / sqrt(n).
Matrix dft_matrix(int n);

/// Completes an orthonormal column set to a full unitary whose leading columns
/// are exactly `columns`.
Matrix complete_basis(const Matrix& columns);

/// Square root of a PSD matrix; eigenvalues under the zero threshold are
/// dropped.
Matrix sqrt_psd(const Matrix& m);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Matrix haar_unitary(int n, Rng& rng);

/// Normalized complex Gaussian vector.
Vector haar_vector(long n, Rng& rng);

/// Full operator acting as `op` on the listed factors (in op's own factor
/// order) and as identity elsewhere.
Matrix embed_operator(const Matrix& op, std::span<const int> dims, std::span<const int> targets);

/// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const Matrix& m);

}  // namespace minent
