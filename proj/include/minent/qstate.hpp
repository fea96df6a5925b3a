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

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "minent/linalg.hpp"
#include "minent/tolerances.hpp"

namespace minent {

/// Descending probability vector summing to one.
///
/// Entries in [-tol.psd, 0) are rounding noise and are clipped to zero (the
/// vector is then renormalized); anything more negative is rejected. Entries
/// under the zero threshold are clipped as well.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> values, const Tolerances& tol = {});

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double max() const { return values_.empty() ? 0.0 : values_.front(); }
  /// Number of entries above the zero threshold.
  std::size_t rank() const;

  static Spectrum uniform(std::size_t n);

 private:
  std::vector<double> values_;
};

/// Hermitian, positive semidefinite, unit-trace matrix over an ordered list of
/// tensor factors (first factor most significant in the row index).
class DensityMatrix {
 public:
  /// Validates every invariant; throws InvalidInput on violation.
  DensityMatrix(Matrix entries, std::vector<int> dims, const Tolerances& tol = {});
  /// Single-factor convenience.
  explicit DensityMatrix(Matrix entries, const Tolerances& tol = {});

  /// Skips the eigenvalue check. For outputs of trace-preserving maps
  /// applied to already validated states; still checks shape and trace.
  static DensityMatrix trusted(Matrix entries, std::vector<int> dims);

  static DensityMatrix pure(const Vector& amplitudes, std::vector<int> dims);
  static DensityMatrix pure(const Vector& amplitudes);
  static DensityMatrix diagonal(std::span<const double> probs);
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix basis_state(int dim, int index);

  const Matrix& matrix() const { return entries_; }
  const std::vector<int>& dims() const { return dims_; }
  long dim() const { return entries_.rows(); }

  /// Eigenvalues, clipped and sorted descending.
  Spectrum spectrum(const Tolerances& tol = {}) const;
  double trace() const { return entries_.trace().real(); }

 private:
  DensityMatrix(Matrix entries, std::vector<int> dims, bool);
  Matrix entries_;
  std::vector<int> dims_;
};

/// Schmidt form sum_k sqrt(lambda_k) |a_k>|b_k>.
struct SchmidtData {
  std::vector<double> coefficients;  // lambda_k, descending, sum 1
  Matrix basis_a;                    // dimA x r, orthonormal columns
  Matrix basis_b;                    // dimB x r
};

class BipartitePureState {
 public:
  BipartitePureState(Vector amplitudes, int dim_a, int dim_b, SchmidtData schmidt)
      : amplitudes_(std::move(amplitudes)), dim_a_(dim_a), dim_b_(dim_b),
        schmidt_(std::move(schmidt)) {}

  /// sum_k sqrt(lambda_k)|k>|k> in the computational bases.
  static BipartitePureState from_schmidt(std::span<const double> coefficients, int dim_a,
                                         int dim_b, const Tolerances& tol = {});

  const Vector& amplitudes() const { return amplitudes_; }
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  const SchmidtData& schmidt() const { return schmidt_; }

  Spectrum marginal_spectrum(const Tolerances& tol = {}) const;
  /// Number of coefficients above the zero threshold.
  int schmidt_rank() const;
  DensityMatrix density() const;
  /// sum_k sqrt(lambda_k) a_k (x) b_k.
  Vector reconstruct() const;

 private:
  Vector amplitudes_;
  int dim_a_;
  int dim_b_;
  SchmidtData schmidt_;
};

/// Reduced state on the factors listed in `keep` (order follows dims).
DensityMatrix partial_trace(const DensityMatrix& state, const std::set<int>& keep);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

BipartitePureState schmidt_decompose(const Vector& amplitudes, int dim_a, int dim_b,
                                     const Tolerances& tol = {});

/// Canonical purification sum_k sqrt(lambda_k)|e_k>|k>, with the state itself
/// on the first factor and a reference of dimension `dim` on the second.
BipartitePureState purify(const DensityMatrix& state, const Tolerances& tol = {});

enum class RandomKind { haar_pure, ginibre_mixed, spectrum_fixed };

DensityMatrix random_state(RandomKind kind, std::vector<int> dims, std::uint64_t seed,
                           const std::optional<std::vector<double>>& spectrum = std::nullopt,
                           const Tolerances& tol = {});

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
/// Squared (Uhlmann-Jozsa) fidelity: (Tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& state);
/// I(X:Y) for two disjoint factor groups of a multipartite state.
double mutual_information(const DensityMatrix& state, const std::set<int>& x,
                          const std::set<int>& y);

/// d^2 pure states whose projectors span all d x d operators:
/// |k>, (|j>+|k>)/sqrt2 and (|j>+i|k>)/sqrt2 for j<k.
std::vector<DensityMatrix> tomographic_states(int d);

}  // namespace minent
