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

#include "minent/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "minent/errors.hpp"

namespace minent {

// ---------------------------------------------------------------------------
// Spectrum

Spectrum::Spectrum(std::vector<double> values, const Tolerances& tol) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidInput("spectrum must be non-empty");
  double sum = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidInput("spectrum entry is not finite");
    if (v < -tol.psd) {
      std::ostringstream msg;
      msg << "spectrum entry " << v << " is negative beyond tolerance";
      throw InvalidInput(msg.str());
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol.tr) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "spectrum sums to " << sum << ", not 1";
    throw InvalidInput(msg.str());
  }
  const double cut = Tolerances::zero_threshold(static_cast<long>(values_.size()));
  bool clipped = false;
  for (double& v : values_) {
    if (v < cut && v != 0.0) {
      v = 0.0;
      clipped = true;
    }
  }
  if (clipped) {
    const double kept = std::accumulate(values_.begin(), values_.end(), 0.0);
    for (double& v : values_) v /= kept;
  }
  std::stable_sort(values_.begin(), values_.end(), std::greater<>());
}

std::size_t Spectrum::rank() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](double v) { return v > 0.0; }));
}

Spectrum Spectrum::uniform(std::size_t n) {
  return Spectrum(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

// ---------------------------------------------------------------------------
// DensityMatrix

namespace {

void check_shape(const Matrix& m, std::vector<int>& dims) {
  if (m.rows() != m.cols()) throw InvalidInput("density matrix must be square");
  if (m.rows() == 0) throw InvalidInput("density matrix must be non-empty");
  if (dims.empty()) dims = {static_cast<int>(m.rows())};
  for (int d : dims) {
    if (d <= 0) throw InvalidInput("factor dimensions must be positive");
  }
  if (product(dims) != m.rows()) {
    std::ostringstream msg;
    msg << "product of dims (" << product(dims) << ") != matrix side (" << m.rows() << ")";
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix entries, std::vector<int> dims, bool)
    : entries_(std::move(entries)), dims_(std::move(dims)) {}

DensityMatrix::DensityMatrix(Matrix entries, std::vector<int> dims, const Tolerances& tol)
    : entries_(std::move(entries)), dims_(std::move(dims)) {
  check_shape(entries_, dims_);
  const double herm = hermiticity_defect(entries_);
  if (herm > tol.herm) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (defect " << herm << ")";
    throw InvalidInput(msg.str());
  }
  if (std::abs(trace() - 1.0) > tol.tr) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "trace is " << trace() << ", not 1";
    throw InvalidInput(msg.str());
  }
  const RealVector ev = hermitian_eigenvalues(entries_);
  if (ev(0) < -tol.psd) {
    std::ostringstream msg;
    msg << "matrix is not positive semidefinite (eigenvalue " << ev(0) << ")";
    throw InvalidInput(msg.str());
  }
}

DensityMatrix::DensityMatrix(Matrix entries, const Tolerances& tol)
    : DensityMatrix(std::move(entries), std::vector<int>{}, tol) {}

DensityMatrix DensityMatrix::trusted(Matrix entries, std::vector<int> dims) {
  check_shape(entries, dims);
  const Tolerances tol;
  if (std::abs(entries.trace().real() - 1.0) > tol.tr || hermiticity_defect(entries) > tol.herm) {
    throw InvalidInput("internal state lost hermiticity or normalization");
  }
  return DensityMatrix(std::move(entries), std::move(dims), true);
}

DensityMatrix DensityMatrix::pure(const Vector& amplitudes, std::vector<int> dims) {
  const double n = amplitudes.norm();
  if (std::abs(n * n - 1.0) > Tolerances{}.tr) throw InvalidInput("state vector is not normalized");
  const Vector v = amplitudes / n;
  return trusted(v * v.adjoint(), std::move(dims));
}

DensityMatrix DensityMatrix::pure(const Vector& amplitudes) { return pure(amplitudes, {}); }

DensityMatrix DensityMatrix::diagonal(std::span<const double> probs) {
  RealVector p(static_cast<Eigen::Index>(probs.size()));
  for (std::size_t i = 0; i < probs.size(); ++i) p(static_cast<Eigen::Index>(i)) = probs[i];
  const Matrix m = p.cast<Complex>().asDiagonal();
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return trusted(Matrix::Identity(dim, dim) / static_cast<double>(dim), {dim});
}

DensityMatrix DensityMatrix::basis_state(int dim, int index) {
  if (index < 0 || index >= dim) throw InvalidInput("basis index out of range");
  Matrix m = Matrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return trusted(std::move(m), {dim});
}

Spectrum DensityMatrix::spectrum(const Tolerances& tol) const {
  const RealVector ev = hermitian_eigenvalues(entries_);
  return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()), tol);
}

// ---------------------------------------------------------------------------
// BipartitePureState

BipartitePureState BipartitePureState::from_schmidt(std::span<const double> coefficients,
                                                    int dim_a, int dim_b, const Tolerances& tol) {
  const int r = std::min(dim_a, dim_b);
  if (static_cast<int>(coefficients.size()) > r) {
    throw InvalidInput("more Schmidt coefficients than min(dimA, dimB)");
  }
  const Spectrum spec(std::vector<double>(coefficients.begin(), coefficients.end()), tol);
  std::vector<int> order(coefficients.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return coefficients[x] > coefficients[y]; });
  for (int k = static_cast<int>(coefficients.size()); k < r; ++k) order.push_back(k);

  SchmidtData data;
  data.coefficients.assign(r, 0.0);
  for (std::size_t k = 0; k < spec.size(); ++k) data.coefficients[k] = spec[k];
  data.basis_a = Matrix::Zero(dim_a, r);
  data.basis_b = Matrix::Zero(dim_b, r);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim_a) * dim_b);
  for (int k = 0; k < r; ++k) {
    const int idx = order[k];
    data.basis_a(idx, k) = 1.0;
    data.basis_b(idx, k) = 1.0;
    amps(static_cast<Eigen::Index>(idx) * dim_b + idx) = std::sqrt(data.coefficients[k]);
  }
  return BipartitePureState(std::move(amps), dim_a, dim_b, std::move(data));
}

Spectrum BipartitePureState::marginal_spectrum(const Tolerances& tol) const {
  return Spectrum(schmidt_.coefficients, tol);
}

int BipartitePureState::schmidt_rank() const {
  const double cut = Tolerances::zero_threshold(static_cast<long>(schmidt_.coefficients.size()));
  return static_cast<int>(std::count_if(schmidt_.coefficients.begin(), schmidt_.coefficients.end(),
                                        [cut](double v) { return v >= cut; }));
}

DensityMatrix BipartitePureState::density() const {
  return DensityMatrix::pure(amplitudes_, {dim_a_, dim_b_});
}

Vector BipartitePureState::reconstruct() const {
  Vector v = Vector::Zero(amplitudes_.size());
  for (std::size_t k = 0; k < schmidt_.coefficients.size(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    v += std::sqrt(schmidt_.coefficients[k]) *
         kron(Vector(schmidt_.basis_a.col(kk)), Vector(schmidt_.basis_b.col(kk)));
  }
  return v;
}

BipartitePureState schmidt_decompose(const Vector& amplitudes, int dim_a, int dim_b,
                                     const Tolerances& tol) {
  if (dim_a <= 0 || dim_b <= 0) throw InvalidInput("factor dimensions must be positive");
  if (amplitudes.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionMismatch("vector length != dimA * dimB");
  }
  const double norm = amplitudes.norm();
  if (std::abs(norm * norm - 1.0) > tol.tr) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state vector has squared norm " << norm * norm << ", not 1";
    throw InvalidInput(msg.str());
  }
  const Vector v = amplitudes / norm;
  Matrix m(dim_a, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) m(a, b) = v(static_cast<Eigen::Index>(a) * dim_b + b);
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  SchmidtData data;
  data.basis_a = svd.matrixU();
  data.basis_b = svd.matrixV().conjugate();
  data.coefficients.resize(static_cast<std::size_t>(s.size()));
  double total = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) total += s(k) * s(k);
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    data.coefficients[static_cast<std::size_t>(k)] = s(k) * s(k) / total;
  }
  // Phase convention: leading nonzero entry of each basis_a column real positive.
  for (Eigen::Index k = 0; k < data.basis_a.cols(); ++k) {
    for (Eigen::Index i = 0; i < data.basis_a.rows(); ++i) {
      const Complex x = data.basis_a(i, k);
      if (std::abs(x) > 1e-12) {
        const Complex phase = x / std::abs(x);
        data.basis_a.col(k) *= std::conj(phase);
        data.basis_b.col(k) *= phase;
        break;
      }
    }
  }
  return BipartitePureState(v, dim_a, dim_b, std::move(data));
}

BipartitePureState purify(const DensityMatrix& state, const Tolerances& tol) {
  const int n = static_cast<int>(state.dim());
  Eigen::SelfAdjointEigenSolver<Matrix> es(state.matrix());
  std::vector<double> raw(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) raw[k] = es.eigenvalues()(n - 1 - k);
  const Spectrum spec(raw, tol);

  SchmidtData data;
  data.coefficients = spec.values();
  data.basis_a = Matrix(n, n);
  data.basis_b = Matrix::Identity(n, n);
  for (int k = 0; k < n; ++k) {
    Vector col = es.eigenvectors().col(n - 1 - k);
    for (int i = 0; i < n; ++i) {
      if (std::abs(col(i)) > 1e-12) {
        col *= std::conj(col(i) / std::abs(col(i)));
        break;
      }
    }
    data.basis_a.col(k) = col;
  }
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(n) * n);
  for (int k = 0; k < n; ++k) {
    Vector e = Vector::Zero(n);
    e(k) = 1.0;
    amps += std::sqrt(data.coefficients[k]) * kron(Vector(data.basis_a.col(k)), e);
  }
  return BipartitePureState(std::move(amps), n, n, std::move(data));
}

// ---------------------------------------------------------------------------
// Multipartite operations

DensityMatrix partial_trace(const DensityMatrix& state, const std::set<int>& keep) {
  const auto& dims = state.dims();
  const int nf = static_cast<int>(dims.size());
  if (keep.empty()) throw InvalidInput("partial_trace: keep set must be non-empty");
  for (int k : keep) {
    if (k < 0 || k >= nf) {
      std::ostringstream msg;
      msg << "partial_trace: factor index " << k << " out of range [0," << nf << ")";
      throw InvalidInput(msg.str());
    }
  }
  if (static_cast<int>(keep.size()) == nf) return state;

  std::vector<int> kept_dims;
  long kept_size = 1;
  long traced_size = 1;
  for (int f = 0; f < nf; ++f) {
    if (keep.count(f)) {
      kept_dims.push_back(dims[f]);
      kept_size *= dims[f];
    } else {
      traced_size *= dims[f];
    }
  }
  // full index for every (kept, traced) pair
  const long full = state.dim();
  std::vector<long> compose(static_cast<std::size_t>(kept_size * traced_size));
  for (long idx = 0; idx < full; ++idx) {
    long rem = idx;
    long kept = 0, traced = 0, kept_stride = 1, traced_stride = 1;
    for (int f = nf - 1; f >= 0; --f) {
      const long digit = rem % dims[f];
      rem /= dims[f];
      if (keep.count(f)) {
        kept += digit * kept_stride;
        kept_stride *= dims[f];
      } else {
        traced += digit * traced_stride;
        traced_stride *= dims[f];
      }
    }
    compose[static_cast<std::size_t>(kept * traced_size + traced)] = idx;
  }
  const Matrix& m = state.matrix();
  Matrix out = Matrix::Zero(kept_size, kept_size);
  for (long c = 0; c < kept_size; ++c) {
    for (long r = 0; r < kept_size; ++r) {
      Complex acc = 0.0;
      for (long t = 0; t < traced_size; ++t) {
        acc += m(compose[static_cast<std::size_t>(r * traced_size + t)],
                 compose[static_cast<std::size_t>(c * traced_size + t)]);
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix::trusted(std::move(out), std::move(kept_dims));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::trusted(kron(a.matrix(), b.matrix()), std::move(dims));
}

DensityMatrix random_state(RandomKind kind, std::vector<int> dims, std::uint64_t seed,
                           const std::optional<std::vector<double>>& spectrum,
                           const Tolerances& tol) {
  if (dims.empty()) throw InvalidInput("random_state: dims must be non-empty");
  for (int d : dims) {
    if (d <= 0) throw InvalidInput("random_state: dims must be positive");
  }
  const long n = product(dims);
  if ((kind == RandomKind::spectrum_fixed) != spectrum.has_value()) {
    throw InvalidInput("random_state: a spectrum is required exactly for spectrum_fixed");
  }
  Rng rng(seed);
  switch (kind) {
    case RandomKind::haar_pure:
      return DensityMatrix::pure(haar_vector(n, rng), std::move(dims));
    case RandomKind::ginibre_mixed: {
      std::normal_distribution<double> normal(0.0, 1.0);
      Matrix g(n, n);
      for (long j = 0; j < n; ++j) {
        for (long i = 0; i < n; ++i) {
          const double re = normal(rng);
          const double im = normal(rng);
          g(i, j) = Complex(re, im);
        }
      }
      Matrix rho = g * g.adjoint();
      rho /= rho.trace().real();
      rho = 0.5 * (rho + rho.adjoint()).eval();
      return DensityMatrix(std::move(rho), std::move(dims), tol);
    }
    case RandomKind::spectrum_fixed: {
      const auto& spec = *spectrum;
      if (static_cast<long>(spec.size()) > n) throw InvalidInput("spectrum longer than dimension");
      double sum = 0.0;
      for (double v : spec) {
        if (!(v >= 0.0)) throw InvalidInput("invalid spectrum: negative entry");
        sum += v;
      }
      if (std::abs(sum - 1.0) > tol.tr) throw InvalidInput("invalid spectrum: does not sum to 1");
      RealVector diag = RealVector::Zero(n);
      for (std::size_t i = 0; i < spec.size(); ++i) diag(static_cast<Eigen::Index>(i)) = spec[i];
      const Matrix u = haar_unitary(static_cast<int>(n), rng);
      Matrix rho = u * diag.cast<Complex>().asDiagonal() * u.adjoint();
      rho = 0.5 * (rho + rho.adjoint()).eval();
      return DensityMatrix(std::move(rho), std::move(dims), tol);
    }
  }
  throw InvalidInput("random_state: unknown kind");
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("trace_distance: dimension mismatch");
  const RealVector ev = hermitian_eigenvalues(a.matrix() - b.matrix());
  return std::clamp(0.5 * ev.cwiseAbs().sum(), 0.0, 1.0);
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("fidelity: dimension mismatch");
  const Matrix prod = sqrt_psd(a.matrix()) * sqrt_psd(b.matrix());
  Eigen::JacobiSVD<Matrix> svd(prod);
  const double root = svd.singularValues().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

double von_neumann_entropy(const DensityMatrix& state) {
  double s = 0.0;
  const Spectrum spec = state.spectrum();
  for (double p : spec.values()) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double mutual_information(const DensityMatrix& state, const std::set<int>& x,
                          const std::set<int>& y) {
  std::set<int> xy = x;
  for (int f : y) {
    if (!xy.insert(f).second) throw InvalidInput("mutual_information: groups overlap");
  }
  return von_neumann_entropy(partial_trace(state, x)) + von_neumann_entropy(partial_trace(state, y)) -
         von_neumann_entropy(partial_trace(state, xy));
}

std::vector<DensityMatrix> tomographic_states(int d) {
  std::vector<DensityMatrix> out;
  out.reserve(static_cast<std::size_t>(d) * d);
  for (int k = 0; k < d; ++k) out.push_back(DensityMatrix::basis_state(d, k));
  const double s = 1.0 / std::numbers::sqrt2;
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Vector plus = Vector::Zero(d);
      plus(j) = s;
      plus(k) = s;
      out.push_back(DensityMatrix::pure(plus));
      Vector iplus = Vector::Zero(d);
      iplus(j) = s;
      iplus(k) = Complex(0.0, s);
      out.push_back(DensityMatrix::pure(iplus));
    }
  }
  return out;
}

}  // namespace minent
