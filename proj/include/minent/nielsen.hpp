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

#include <optional>
#include <vector>

#include "minent/entropy.hpp"
#include "minent/report.hpp"

namespace minent {

/// One-way LOCC instrument converting a pad into a rank-d maximally
/// entangled state: Alice applies {K_i} and records i, Bob applies U_i.
///
/// K_i act on A (dimA x dimA) and map into span(target_basis_a); the U_i act
/// on B. When the pad marginal has a kernel, `kernel_projector` is an extra
/// Kraus branch (outcome index kraus.size()) so completeness holds on all of A.
struct NielsenInstrument {
  int d = 1;
  int dim_a = 1;
  int dim_b = 1;
  std::vector<Matrix> kraus;
  std::vector<Matrix> corrections;
  std::vector<double> probs;
  Matrix target_basis_a;  // dimA x d
  Matrix target_basis_b;  // dimB x d
  std::optional<Matrix> kernel_projector;
  UniformSubsetDecomposition decomposition;

  std::size_t outcomes() const { return kraus.size(); }
  /// Outcome register size, counting the kernel branch when present.
  int register_dim() const { return static_cast<int>(kraus.size()) + (kernel_projector ? 1 : 0); }
  /// Phi_A: uniform rank-d state on span(target_basis_a).
  Matrix target_state_a() const;
  /// (1/sqrt d) sum_r |a_r>|b_r> on A (x) B.
  Vector target_pad() const;
  Json to_json() const;
};

NielsenInstrument build_instrument(const BipartitePureState& pad, int d, const Tolerances& tol = {});

struct InstrumentOutput {
  DensityMatrix state;  // dims [dimA, register_dim]
  double kernel_weight = 0.0;  // probability of the kernel outcome
};

/// sum_i K_i w K_i^dagger (x) |i><i|.
InstrumentOutput apply_instrument(const NielsenInstrument& inst, const DensityMatrix& state);

/// Deviations for completeness, per-branch output, Kraus ranks, weights and
/// the pad-to-target conversion. Passes iff every deviation <= tol.eq.
VerificationReport verify_instrument(const NielsenInstrument& inst, const BipartitePureState& pad,
                                     const Tolerances& tol = {});

}  // namespace minent
