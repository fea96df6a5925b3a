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

#include "minent/linalg.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "minent/errors.hpp"
#include "minent/tolerances.hpp"

namespace minent {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

long product(std::span<const int> dims) {
  long p = 1;
  for (int d : dims) p *= d;
  return p;
}

double hermiticity_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  const Matrix id = Matrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

Matrix permutation_matrix(std::span<const int> perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(perm[i], i) = 1.0;
  return p;
}

Matrix permute_conjugate(const Matrix& m, std::span<const int> perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("permute_conjugate: size");
  Matrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) out(perm[i], perm[j]) = m(i, j);
  }
  return out;
}

Matrix dft_matrix(int n) {
  Matrix f(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // reduce the exponent first so large n keeps full phase accuracy
      const long e = (static_cast<long>(j) * k) % n;
      f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(e) / n);
    }
  }
  return f;
}

Matrix complete_basis(const Matrix& columns) {
  const Eigen::Index n = columns.rows();
  const Eigen::Index k = columns.cols();
  if (k > n) throw InvalidInput("complete_basis: more columns than rows");
  if (k == 0) return Matrix::Identity(n, n);
  Eigen::HouseholderQR<Matrix> qr(columns);
  Matrix q = qr.householderQ();
  q.leftCols(k) = columns;
  return q;
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Matrix sqrt_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const double cut = Tolerances::zero_threshold(m.rows());
  RealVector roots = es.eigenvalues();
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    roots(i) = roots(i) < cut ? 0.0 : std::sqrt(roots(i));
  }
  return es.eigenvectors() * roots.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

Matrix embed_operator(const Matrix& op, std::span<const int> dims, std::span<const int> targets) {
  const int nf = static_cast<int>(dims.size());
  std::vector<bool> is_target(static_cast<std::size_t>(nf), false);
  long sub_size = 1;
  for (int t : targets) {
    if (t < 0 || t >= nf || is_target[t]) throw InvalidInput("embed_operator: bad target list");
    is_target[t] = true;
    sub_size *= dims[t];
  }
  if (op.rows() != sub_size || op.cols() != sub_size) {
    throw DimensionMismatch("embed_operator: operator size != product of target dims");
  }
  const long n = product(dims);
  const long rest_size = n / sub_size;
  // full index of (rest, sub)
  std::vector<long> full(static_cast<std::size_t>(n));
  std::vector<int> digit(static_cast<std::size_t>(nf));
  for (long idx = 0; idx < n; ++idx) {
    long rem = idx;
    for (int f = nf - 1; f >= 0; --f) {
      digit[f] = static_cast<int>(rem % dims[f]);
      rem /= dims[f];
    }
    long sub = 0;
    for (int t : targets) sub = sub * dims[t] + digit[t];
    long rest = 0;
    for (int f = 0; f < nf; ++f) {
      if (!is_target[f]) rest = rest * dims[f] + digit[f];
    }
    full[static_cast<std::size_t>(rest * sub_size + sub)] = idx;
  }
  Matrix out = Matrix::Zero(n, n);
  for (long rest = 0; rest < rest_size; ++rest) {
    const long* base = full.data() + rest * sub_size;
    for (long c = 0; c < sub_size; ++c) {
      for (long r = 0; r < sub_size; ++r) out(base[r], base[c]) = op(r, c);
    }
  }
  return out;
}

namespace {

Matrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  const double s = 1.0 / std::numbers::sqrt2;
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re * s, im * s);
    }
  }
  return g;
}

}  // namespace

Matrix haar_unitary(int n, Rng& rng) {
  const Matrix z = ginibre(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

Vector haar_vector(long n, Rng& rng) {
  Vector v = ginibre(static_cast<int>(n), 1, rng).col(0);
  return v / v.norm();
}

}  // namespace minent
