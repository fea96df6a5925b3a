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

#include "minent/masking.hpp"

#include <cmath>
#include <sstream>

#include "minent/errors.hpp"

namespace minent {

Json MaskingScheme::to_json() const {
  return Json{{"d", d},
              {"mols", mols.to_json()},
              {"V", matrix_to_json(v, {d, d})},
              {"decoder", matrix_to_json(decoder, {d, d})},
              {"safe_state", minent::to_json(safe_state)}};
}

MaskingScheme build_masking_scheme(int d) {
  MolsPair mols = build_mols(d);
  std::vector<int> perm(static_cast<std::size_t>(d) * d);
  for (int s = 0; s < d; ++s) {
    for (int m = 0; m < d; ++m) perm[static_cast<std::size_t>(s * d + m)] = mols.g(s, m) * d + mols.h(s, m);
  }
  Matrix v = permutation_matrix(perm);
  Matrix decoder = v.adjoint();
  return MaskingScheme{d, std::move(mols), std::move(perm), std::move(v), std::move(decoder),
                       DensityMatrix::maximally_mixed(d)};
}

namespace {

void require_secret_dim(const MaskingScheme& scheme, const DensityMatrix& psi) {
  if (psi.dim() != scheme.d) {
    std::ostringstream msg;
    msg << "secret has dimension " << psi.dim() << ", scheme masks dimension " << scheme.d;
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

DensityMatrix mask_state(const MaskingScheme& scheme, const DensityMatrix& psi) {
  require_secret_dim(scheme, psi);
  const Matrix in = kron(psi.matrix(), scheme.safe_state.matrix());
  return DensityMatrix::trusted(permute_conjugate(in, scheme.v_perm), {scheme.d, scheme.d});
}

KrausChannel secret_encoder(const MaskingScheme& scheme, const DensityMatrix& psi) {
  require_secret_dim(scheme, psi);
  const int d = scheme.d;
  Eigen::SelfAdjointEigenSolver<Matrix> es(psi.matrix());
  const double cut = Tolerances::zero_threshold(d);
  KrausChannel ch{d, d, {}};
  for (int k = d - 1; k >= 0; --k) {
    const double q = es.eigenvalues()(k);
    if (q < cut) continue;
    const Vector branch = es.eigenvectors().col(k) * std::sqrt(q);
    std::vector<Matrix> per_g(static_cast<std::size_t>(d), Matrix::Zero(d, d));
    for (int s = 0; s < d; ++s) {
      for (int m = 0; m < d; ++m) {
        per_g[static_cast<std::size_t>(scheme.mols.g(s, m))](scheme.mols.h(s, m), m) += branch(s);
      }
    }
    for (auto& a : per_g) ch.kraus.push_back(std::move(a));
  }
  return ch;
}

PstDecoder pst_decoder(const MaskingScheme& scheme) {
  const int d = scheme.d;
  std::vector<int> solve_s(static_cast<std::size_t>(d) * d, -1);  // [m * d + h] -> s
  for (int s = 0; s < d; ++s) {
    for (int m = 0; m < d; ++m) solve_s[static_cast<std::size_t>(m * d + scheme.mols.h(s, m))] = s;
  }
  std::vector<int> perm(static_cast<std::size_t>(d) * d);
  for (int h = 0; h < d; ++h) {
    for (int m = 0; m < d; ++m) {
      const int s = solve_s[static_cast<std::size_t>(m * d + h)];
      perm[static_cast<std::size_t>(h * d + m)] = s * d + scheme.mols.g(s, m);
    }
  }
  Matrix w = permutation_matrix(perm);
  return {std::move(perm), std::move(w)};
}

DensityMatrix decode_canonical(const MaskingScheme& scheme, const DensityMatrix& psi) {
  const int d = scheme.d;
  const KrausChannel enc = secret_encoder(scheme, psi);
  Vector pad = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int m = 0; m < d; ++m) pad(m * d + m) = 1.0 / std::sqrt(static_cast<double>(d));
  const Matrix id = Matrix::Identity(d, d);
  Matrix joint = Matrix::Zero(pad.size(), pad.size());
  for (const auto& a : enc.kraus) {
    const Vector w = kron(a, id) * pad;
    joint += w * w.adjoint();
  }
  const PstDecoder dec = pst_decoder(scheme);
  return DensityMatrix::trusted(permute_conjugate(joint, dec.perm), {d, d});
}

Json MaskingDiagnostics::to_json() const {
  return Json{{"I_RA", i_ra}, {"I_RB", i_rb}, {"I_RAB", i_rab}, {"I_flagA", i_flag_a},
              {"I_flagB", i_flag_b}, {"report", report.to_json()}};
}

MaskingDiagnostics masking_diagnostics(const MaskingScheme& scheme) {
  const int d = scheme.d;
  constexpr double kTol = 1e-8;
  Vector omega = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int r = 0; r < d; ++r) omega(r * d + r) = 1.0 / std::sqrt(static_cast<double>(d));
  const Matrix ref_secret = omega * omega.adjoint();
  const Matrix in = kron(ref_secret, scheme.safe_state.matrix());  // R, S, E
  std::vector<int> perm(static_cast<std::size_t>(d) * d * d);
  for (int r = 0; r < d; ++r) {
    for (int i = 0; i < d * d; ++i) perm[static_cast<std::size_t>(r * d * d + i)] = r * d * d + scheme.v_perm[i];
  }
  const DensityMatrix rab = DensityMatrix::trusted(permute_conjugate(in, perm), {d, d, d});

  MaskingDiagnostics out;
  out.i_ra = mutual_information(rab, {0}, {1});
  out.i_rb = mutual_information(rab, {0}, {2});
  out.i_rab = mutual_information(rab, {0}, {1, 2});

  Matrix flagged = Matrix::Zero(static_cast<Eigen::Index>(d) * d * d, static_cast<Eigen::Index>(d) * d * d);
  for (int r = 0; r < d; ++r) {
    const DensityMatrix masked = mask_state(scheme, DensityMatrix::basis_state(d, r));
    flagged.block(r * d * d, r * d * d, d * d, d * d) = masked.matrix() / static_cast<double>(d);
  }
  const DensityMatrix fab = DensityMatrix::trusted(std::move(flagged), {d, d, d});
  out.i_flag_a = mutual_information(fab, {0}, {1});
  out.i_flag_b = mutual_information(fab, {0}, {2});

  out.report.add("I(R:A)", std::abs(out.i_ra), kTol);
  out.report.add("I(R:B)", std::abs(out.i_rb), kTol);
  out.report.add("|I(R:AB) - 2 log2 d|", std::abs(out.i_rab - 2.0 * std::log2(static_cast<double>(d))), kTol);
  out.report.add("I(flag:A)", std::abs(out.i_flag_a), kTol);
  out.report.add("I(flag:B)", std::abs(out.i_flag_b), kTol);
  return out;
}

}  // namespace minent
