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

#include "minent/nielsen.hpp"
#include "minent/report.hpp"

namespace minent {

/// U|i,j,k> = w^{jk} |i,j,(k+i) mod d>, w = exp(2 pi i/d), on (d^2 system) (x)
/// (d-level catalyst).
Matrix optimal_dephasing_unitary(int d);

/// Controlled phase U|j,k> = w^{jk}|j,k> on (D system) (x) (D catalyst).
Matrix naive_dephasing_unitary(int dim);

/// Tr_cat[U (rho (x) I/c) U^dagger] for a unitary on system (x) catalyst.
DensityMatrix induced_channel_output(const Matrix& u, int catalyst_dim, const DensityMatrix& rho);
/// Tr_sys[U (rho (x) I/c) U^dagger].
DensityMatrix complementary_output(const Matrix& u, int catalyst_dim, const DensityMatrix& rho);

/// Catalytic dephasing of d^2-level systems driven by an arbitrary
/// precatalyst sigma with S_min(sigma) >= log2 d.
///
/// The joint register order is [S, A', B', B]: system (d^2), leftover copy
/// A' and B' (one level per instrument outcome), and the catalyst B (the
/// space sigma lives on).
struct DephasingPlan {
  static constexpr int kSystem = 0;
  static constexpr int kLeftoverA = 1;
  static constexpr int kLeftoverB = 2;
  static constexpr int kCatalyst = 3;

  int d = 2;
  DensityMatrix precatalyst;
  NielsenInstrument instrument;     // built on the canonical purification of sigma
  Matrix embed_isometry;            // J: n -> m*m*n, ordered [A', B', B]
  Matrix dephase_unitary;           // optimal_dephasing_unitary(d)
  Matrix system_unitary;            // U on S (x) span(target basis), identity elsewhere on B
  std::vector<Matrix> catalyst_corrections;  // R_i on B, one per outcome
  DensityMatrix leftover;           // kappa, diagonal in the outcome basis
  DensityMatrix catalyst;           // Phi_B, uniform rank d

  int system_dim() const { return d * d; }
  int register_dim() const { return instrument.register_dim(); }
  int catalyst_dim() const { return instrument.dim_a; }
  std::vector<int> joint_dims() const;
  Json to_json() const;
};

/// Throws InfeasibleSOR when lambda_max(sigma) > 1/d + tol.major.
DephasingPlan plan_catalytic_dephasing(const DensityMatrix& sigma, int d, const Tolerances& tol = {});

/// Tr_{B'}[J sigma J^dagger] against kappa (x) Phi_B and the leftover weights
/// against the instrument probabilities.
VerificationReport verify_plan(const DephasingPlan& plan, const Tolerances& tol = {});

struct DephasingRun {
  DensityMatrix system_out;     // S
  DensityMatrix output_side;    // S (x) A', expected diag(rho) (x) kappa
  DensityMatrix catalyst_out;   // B' (x) B, expected kappa (x) Phi_B, independent of rho
  DensityMatrix leftover_out;   // A'
  DensityMatrix joint;          // [S, A', B', B]
};

DephasingRun run_dephasing(const DephasingPlan& plan, const DensityMatrix& rho);

/// Deviations of a run from the expected outputs for input rho.
VerificationReport verify_run(const DephasingPlan& plan, const DensityMatrix& rho,
                              const DephasingRun& run, const Tolerances& tol = {});

struct MinEntropyCheck {
  double catalyst_max = 0.0;  // lambda_max(Phi_B (x) kappa)
  double branch_max = 0.0;    // max_i Tr[K_i sigma K_i^dagger] / d
  double source_max = 0.0;    // lambda_max(sigma)
  VerificationReport report;
  Json to_json() const;
};

MinEntropyCheck check_min_entropy_nondecrease(const DephasingPlan& plan, const Tolerances& tol = {});

struct CatalystRecovery {
  DensityMatrix catalyst;  // B, expected sigma
  DensityMatrix joint;     // B' (x) B after the Fourier dephasing
};

/// Applies sum_i |i><i| (x) R_i^dagger to kappa (x) Phi_B, dephases B' in the
/// Fourier basis and discards it. `skip` replaces one R_i by the identity.
CatalystRecovery recover_catalyst(const DephasingPlan& plan, std::optional<int> skip = std::nullopt);

struct CollapseOutcome {
  int outcome = 0;
  double probability = 0.0;
  bool skipped = false;  // zero-probability outcome
  std::optional<DensityMatrix> system;
  std::optional<DensityMatrix> catalyst;
  double catalyst_deviation = 0.0;  // trace distance to Phi_B
  double system_deviation = 0.0;    // trace distance to the unconditioned system output
};

struct CollapseResult {
  std::vector<CollapseOutcome> outcomes;
  double outcome_system_information = 0.0;  // I(outcome : S) in bits
  VerificationReport report;
  Json to_json() const;
};

/// Projective measurement of B' in the columns of `basis` (identity by
/// default) applied to a joint run state.
CollapseResult collapse_to_standard(const DephasingPlan& plan, const DensityMatrix& joint,
                                    const std::optional<Matrix>& basis = std::nullopt,
                                    const Tolerances& tol = {});

}  // namespace minent
