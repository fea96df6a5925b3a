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


#include "minent/pst.hpp"

#include <algorithm>
#include <sstream>

#include "minent/entropy.hpp"
#include "minent/errors.hpp"

namespace minent {

namespace {

constexpr long kMaxPstJointDim = 1024;

Matrix reshape_pad(const Vector& amps, int dim_a, int dim_b) {
  Matrix m(dim_a, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) m(a, b) = amps(static_cast<Eigen::Index>(a) * dim_b + b);
  }
  return m;
}

// (I_d (x) Q^dagger) w (I_d (x) Q) + I_d (x) (I - Q^dagger Q)
Matrix lift_partner(const Matrix& w, const Matrix& q, int d) {
  const long nb = q.cols();
  const Matrix id = Matrix::Identity(d, d);
  return kron(id, Matrix(q.adjoint())) * w * kron(id, q) +
         kron(id, Matrix(Matrix::Identity(nb, nb) - q.adjoint() * q));
}

}  // namespace

Json PstProtocol::to_json() const {
  return Json{{"d", d},
              {"register_dim", register_dim()},
              {"pad", minent::to_json(pad)},
              {"instrument", instrument.to_json()},
              {"scheme", scheme.to_json()},
              {"decoder", matrix_to_json(decoder)}};
}

PstProtocol plan_pst(const BipartitePureState& pad, int d, const Tolerances& tol) {
  if (d <= 0) throw InvalidInput("secret dimension d must be positive");
  if (d > kMaxPstDimension) {
    std::ostringstream msg;
    msg << "secret dimension " << d << " exceeds the simulation cap " << kMaxPstDimension;
    throw LimitExceeded(msg.str());
  }
  if (pad.schmidt_rank() > kMaxPadRank) {
    std::ostringstream msg;
    msg << "pad Schmidt rank " << pad.schmidt_rank() << " exceeds the simulation cap " << kMaxPadRank;
    throw LimitExceeded(msg.str());
  }
  NielsenInstrument inst = build_instrument(pad, d, tol);
  MaskingScheme scheme = build_masking_scheme(d);
  const long joint = static_cast<long>(d) * static_cast<long>(inst.kraus.size()) * pad.dim_b();
  if (joint > kMaxPstJointDim) {
    std::ostringstream msg;
    msg << "joint register dimension " << joint << " exceeds " << kMaxPstJointDim;
    throw LimitExceeded(msg.str());
  }
  Matrix compress_a = inst.target_basis_a.adjoint();
  Matrix compress_b = inst.target_basis_b.adjoint();
  Matrix decoder = pst_decoder(scheme).w;
  return PstProtocol{.pad = pad,
                     .d = d,
                     .instrument = std::move(inst),
                     .scheme = std::move(scheme),
                     .compress_a = std::move(compress_a),
                     .compress_b = std::move(compress_b),
                     .decoder = std::move(decoder)};
}

PstProtocol pst_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("pad") || !j.contains("d")) {
    throw InvalidInput("protocol bundle needs \"pad\" and \"d\"");
  }
  return plan_pst(pad_from_json(j.at("pad"), tol), j.at("d").get<int>(), tol);
}

PstEncoding pst_encode(const PstProtocol& proto, const DensityMatrix& psi) {
  const int d = proto.d;
  if (psi.dim() != d) {
    std::ostringstream msg;
    msg << "protocol carries " << d << "-level secrets, input has " << psi.dim();
    throw DimensionMismatch(msg.str());
  }
  const int m = proto.register_dim();
  const int nb = proto.pad.dim_b();
  const Matrix amps = reshape_pad(proto.pad.amplitudes(), proto.pad.dim_a(), nb);
  const long n = static_cast<long>(d) * m * nb;

  // sum_i |i><i|_C (x) (P K_i (x) I)|Psi><Psi|(P K_i (x) I)^dagger, ordered [A, C, B]
  Matrix state = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    const Matrix branch = proto.compress_a * proto.instrument.kraus[i] * amps;
    Vector u = Vector::Zero(n);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < nb; ++b) u((static_cast<long>(a) * m + i) * nb + b) = branch(a, b);
    }
    state += u * u.adjoint();
  }

  const KrausChannel enc = secret_encoder(proto.scheme, psi);
  const Matrix id_rest = Matrix::Identity(static_cast<long>(m) * nb, static_cast<long>(m) * nb);
  Matrix encoded = Matrix::Zero(n, n);
  for (const auto& k : enc.kraus) {
    const Matrix op = kron(k, id_rest);
    encoded += op * state * op.adjoint();
  }
  auto joint = DensityMatrix::trusted(encoded, proto.joint_dims());
  return PstEncoding{.joint = joint, .transmitted = partial_trace(joint, {0, 1}), .residual_b = partial_trace(joint, {2})};
}

DensityMatrix pst_recover(const PstProtocol& proto, const DensityMatrix& joint, const RecoveryOptions& opts) {
  if (joint.dims() != proto.joint_dims()) {
    throw DimensionMismatch("joint state does not have the protocol's [A, C, B] layout");
  }
  const int d = proto.d;
  const int m = proto.register_dim();
  const int nb = proto.pad.dim_b();
  Matrix state = joint.matrix();
  if (opts.apply_correction) {
    Matrix control = Matrix::Zero(static_cast<long>(m) * nb, static_cast<long>(m) * nb);
    for (int i = 0; i < m; ++i) {
      control.block(static_cast<long>(i) * nb, static_cast<long>(i) * nb, nb, nb) = proto.instrument.corrections[i];
    }
    const Matrix op = kron(Matrix(Matrix::Identity(d, d)), control);
    state = op * state * op.adjoint();
  }
  const auto ab = partial_trace(DensityMatrix::trusted(state, proto.joint_dims()), {0, 2});
  const Matrix w = lift_partner(proto.decoder, proto.compress_b, d);
  auto out = DensityMatrix::trusted(w * ab.matrix() * w.adjoint(), {d, nb});
  if (opts.retain_junk) return out;
  return partial_trace(out, {0});
}

Json PstReport::to_json() const {
  return Json{{"pass", pass()},
              {"max_eaves_distance", max_eaves_distance},
              {"min_fidelity", min_fidelity},
              {"pst_power_bits", pst_power_bits},
              {"checks", report.to_json()}};
}

PstReport verify_pst(const PstProtocol& proto, const std::vector<DensityMatrix>& secrets, const Tolerances& tol) {
  if (secrets.size() < 2) throw InvalidInput("verify_pst needs at least two secrets");
  PstReport out;
  std::vector<DensityMatrix> sent;
  for (const auto& psi : secrets) {
    PstEncoding enc = pst_encode(proto, psi);
    out.min_fidelity = std::min(out.min_fidelity, fidelity(pst_recover(proto, enc.joint), psi));
    sent.push_back(std::move(enc.transmitted));
  }
  for (std::size_t i = 0; i < sent.size(); ++i) {
    for (std::size_t j = i + 1; j < sent.size(); ++j) {
      out.max_eaves_distance = std::max(out.max_eaves_distance, trace_distance(sent[i], sent[j]));
    }
  }
  out.pst_power_bits = pst_power(proto.pad, tol);
  out.report.add("eavesdropper_distance", out.max_eaves_distance, 1e-9);
  out.report.add("fidelity_deficit", 1.0 - out.min_fidelity, 1e-9);
  return out;
}

PstReport verify_pst(const PstProtocol& proto, int n_secrets, std::uint64_t seed, const Tolerances& tol) {
  if (n_secrets < 2) throw InvalidInput("verify_pst needs at least two secrets");
  std::vector<DensityMatrix> secrets;
  for (int k = 0; k < n_secrets; ++k) {
    secrets.push_back(random_state(RandomKind::haar_pure, {proto.d}, seed + static_cast<std::uint64_t>(k)));
  }
  return verify_pst(proto, secrets, tol);
}

}  // namespace minent
