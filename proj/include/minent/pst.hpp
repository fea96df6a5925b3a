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
#include <vector>

#include "minent/masking.hpp"
#include "minent/nielsen.hpp"

namespace minent {

/// One-shot private state transfer over a pure bipartite pad.
///
/// Alice applies the instrument on her half A, keeps the outcome in a
/// classical register C, compresses A onto the d-dimensional target span and
/// applies the secret encoder. Bob corrects B with U_i controlled by C,
/// discards C and runs the decoder W on (A, B).
struct PstProtocol {
  BipartitePureState pad;
  int d = 0;
  NielsenInstrument instrument;
  MaskingScheme scheme;
  Matrix compress_a;  // d x dimA, |r><a~_r|
  Matrix compress_b;  // d x dimB, |r><b~_r|
  Matrix decoder;     // W on (encoded half) (x) (pad partner), d^2 x d^2

  /// Size of the classical register, one level per decomposition term.
  int register_dim() const { return static_cast<int>(instrument.kraus.size()); }
  std::vector<int> joint_dims() const { return {d, register_dim(), pad.dim_b()}; }
  Json to_json() const;
};

inline constexpr int kMaxPstDimension = 9;
inline constexpr int kMaxPadRank = 32;

/// Throws InfeasiblePad, UnsupportedOrder, or LimitExceeded past the size caps.
PstProtocol plan_pst(const BipartitePureState& pad, int d, const Tolerances& tol = {});

/// Re-plans from a bundle written by PstProtocol::to_json.
PstProtocol pst_from_json(const Json& j, const Tolerances& tol = {});

struct PstEncoding {
  DensityMatrix joint;        // [A (d), C, B]
  DensityMatrix transmitted;  // [A, C]
  DensityMatrix residual_b;   // B
};

struct RecoveryOptions {
  bool apply_correction = true;
  bool retain_junk = false;  // return [secret, junk] instead of the secret alone
};

PstEncoding pst_encode(const PstProtocol& proto, const DensityMatrix& psi);
DensityMatrix pst_recover(const PstProtocol& proto, const DensityMatrix& joint, const RecoveryOptions& opts = {});

struct PstReport {
  double max_eaves_distance = 0.0;
  double min_fidelity = 1.0;
  double pst_power_bits = 0.0;
  VerificationReport report;

  bool pass() const { return report.pass(); }
  Json to_json() const;
};

/// Haar-random pure secrets drawn from `seed`.
PstReport verify_pst(const PstProtocol& proto, int n_secrets, std::uint64_t seed, const Tolerances& tol = {});
PstReport verify_pst(const PstProtocol& proto, const std::vector<DensityMatrix>& secrets,
                     const Tolerances& tol = {});

}  // namespace minent
