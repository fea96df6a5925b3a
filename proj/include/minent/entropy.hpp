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

#include <limits>
#include <vector>

#include "minent/qstate.hpp"
#include "minent/serialize.hpp"

namespace minent {

inline constexpr double kAlphaInf = std::numeric_limits<double>::infinity();

/// Renyi entropy in bits. alpha = 0 gives log2 rank, 1 the von Neumann
/// entropy, infinity the min-entropy.
double renyi_entropy(const Spectrum& spectrum, double alpha);
double renyi_entropy(const DensityMatrix& state, double alpha, const Tolerances& tol = {});

inline double min_entropy(const Spectrum& s) { return renyi_entropy(s, kAlphaInf); }
inline double min_entropy(const DensityMatrix& rho) { return renyi_entropy(rho, kAlphaInf); }

/// True iff y is majorized by x (every descending partial sum of y is at
/// most that of x, up to tol.major). The shorter vector is zero-padded.
bool majorizes(std::span<const double> x, std::span<const double> y, const Tolerances& tol = {});
bool majorizes(const Spectrum& x, const Spectrum& y, const Tolerances& tol = {});

/// lambda = sum_m p_m * (uniform distribution on subset S_m), |S_m| = d.
struct UniformSubsetDecomposition {
  struct Term {
    double weight;
    std::vector<int> subset;  // ascending spectrum indices
  };
  int d = 1;
  std::vector<Term> terms;

  /// sum_m (p_m / d) * indicator(S_m), of length n.
  std::vector<double> reconstruct(std::size_t n) const;
  Json to_json() const;
};

/// Greedy extraction of uniform d-subsets. Throws InfeasibleSpectrum when
/// max(lambda) > 1/d + tol.major. Entries under the zero threshold are never
/// selected.
UniformSubsetDecomposition uniform_subset_decompose(const Spectrum& lambda, int d,
                                                    const Tolerances& tol = {});

/// Real orthogonal U (returned as complex) with
/// diag(U diag(spectrum) U^dagger) = target, built from at most n-1 plane
/// rotations followed by a permutation. Throws NotMajorized unless
/// target is majorized by spectrum.
Matrix schur_horn_unitary(const Spectrum& spectrum, std::span<const double> target,
                          const Tolerances& tol = {});

/// floor(2^{S_min}) with a relative guard so exact powers of two survive.
int masking_power(const Spectrum& s, const Tolerances& tol = {});
int masking_power(const DensityMatrix& sigma, const Tolerances& tol = {});

/// log2 of the masking power of the pad's marginal.
double pst_power(const BipartitePureState& pad, const Tolerances& tol = {});

}  // namespace minent
