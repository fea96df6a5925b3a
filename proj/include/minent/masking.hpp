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

#include <vector>

#include "minent/channel.hpp"
#include "minent/mols.hpp"
#include "minent/report.hpp"

namespace minent {

/// Universal masker T(psi) = V (psi (x) I/d) V^dagger with
/// V|s>|m> = |g(s,m)>|h(s,m)> for an orthogonal Latin square pair (g, h).
struct MaskingScheme {
  int d = 0;
  MolsPair mols;
  std::vector<int> v_perm;  // V|i> = |v_perm[i]>, i = s*d + m
  Matrix v;                 // d^2 x d^2 permutation
  Matrix decoder;           // V^dagger
  DensityMatrix safe_state; // I/d

  Json to_json() const;
};

/// Throws UnsupportedOrder for orders without a construction.
MaskingScheme build_masking_scheme(int d);

/// V (psi (x) zeta) V^dagger, dims [d, d].
DensityMatrix mask_state(const MaskingScheme& scheme, const DensityMatrix& psi);

/// Phi_psi(sigma) = Tr_A[V (psi (x) sigma) V^dagger] as Kraus operators
/// A_{g,k} = sqrt(q_k) (<g| (x) I) V (|psi_k> (x) I), ordered by eigenbranch k
/// (descending q_k) then g.
KrausChannel secret_encoder(const MaskingScheme& scheme, const DensityMatrix& psi);

/// Permutation W|h,m> = |s(h,m), g(s(h,m), m)> where s(h,m) is the unique s
/// with h(s,m) = h. Acts on (encoded half) (x) (pad partner).
struct PstDecoder {
  std::vector<int> perm;
  Matrix w;
};
PstDecoder pst_decoder(const MaskingScheme& scheme);

/// Applies W to (Phi_psi (x) I)(|Phi><Phi|) for the canonical maximally
/// entangled pad and returns the full two-register output (psi (x) I/d).
DensityMatrix decode_canonical(const MaskingScheme& scheme, const DensityMatrix& psi);

struct MaskingDiagnostics {
  double i_ra = 0.0;
  double i_rb = 0.0;
  double i_rab = 0.0;
  double i_flag_a = 0.0;  // classical reference instead of R
  double i_flag_b = 0.0;
  VerificationReport report;
  Json to_json() const;
};

/// Mutual information between a reference R, maximally entangled with the
/// secret input, and the masked shares.
MaskingDiagnostics masking_diagnostics(const MaskingScheme& scheme);

/// Output of the dephase / DFT / dephase composite that masks d^2-level
/// states using two copies of a dephasing source.
struct DoubleDephasingResult {
  DensityMatrix system;         // d^2 levels, expected I/d^2
  DensityMatrix sources;        // both source registers after the run
  double system_deviation = 0;  // max |system - I/d^2|
};

/// Dephases rho in the computational basis with sigma, applies the d^2-point
/// DFT, then dephases again with a second copy of sigma. Throws InfeasibleSOR
/// when S_min(sigma) < log2 d.
DoubleDephasingResult mask_via_double_dephasing(const DensityMatrix& sigma, int d,
                                                const DensityMatrix& rho, const Tolerances& tol = {});

}  // namespace minent
