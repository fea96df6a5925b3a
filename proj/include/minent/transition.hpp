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

#include "minent/dephasing.hpp"

namespace minent {

/// True iff spectrum(target) is majorized by spectrum(source).
bool transition_feasible(const DensityMatrix& source, const DensityMatrix& target, const Tolerances& tol = {});

struct CatalystRequirement {
  int dim = 0;                 // D
  int d = 0;                   // ceil(sqrt(D)), system embedded into d^2 levels
  double sufficient_bits = 0;  // log2 d
  double necessary_bits = 0;   // (log2 D) / 2
  bool perfect_square = false;
  double gap_bits() const { return sufficient_bits - necessary_bits; }
  Json to_json() const;
};

CatalystRequirement catalyst_requirement(int dim);

/// rho -> U2 E(U1 rho U1^dagger) U2^dagger with E the catalytic dephasing of
/// the D-level system embedded into d^2 levels.
struct TransitionPlan {
  DensityMatrix source;
  DensityMatrix target;
  Matrix u1;
  Matrix u2;
  CatalystRequirement requirement;
  DephasingPlan dephasing;

  int dim() const { return static_cast<int>(source.dim()); }
  Json to_json() const;
};

/// Throws NotMajorized or InsufficientCatalyst.
TransitionPlan plan_transition(const DensityMatrix& source, const DensityMatrix& target, const DensityMatrix& sigma,
                               const Tolerances& tol = {});

struct TransitionRun {
  DensityMatrix output;
  DephasingRun dephasing;
};

TransitionRun execute(const TransitionPlan& plan, const DensityMatrix& rho);
inline TransitionRun execute(const TransitionPlan& plan) { return execute(plan, plan.source); }

/// Diagonal of U1 source U1^dagger against the target spectrum, the U2 step,
/// and the executed output against the target.
VerificationReport verify_transition(const TransitionPlan& plan, const Tolerances& tol = {});

}  // namespace minent
