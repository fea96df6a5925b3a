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

#include "minent/channel.hpp"

#include "minent/errors.hpp"

namespace minent {

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const {
  if (rho.dim() != in_dim) throw DimensionMismatch("channel input dimension mismatch");
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (const auto& a : kraus) out += a * rho.matrix() * a.adjoint();
  return DensityMatrix::trusted(std::move(out), {out_dim});
}

double KrausChannel::completeness_defect() const {
  Matrix sum = Matrix::Zero(in_dim, in_dim);
  for (const auto& a : kraus) sum += a.adjoint() * a;
  return max_abs_diff(sum, Matrix::Identity(in_dim, in_dim));
}

}  // namespace minent
