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


#include <sstream>

#include "minent/dephasing.hpp"
#include "minent/errors.hpp"
#include "minent/masking.hpp"

namespace minent {

namespace {

constexpr long kMaxDoubleDephasingDim = 2048;

}  // namespace

DoubleDephasingResult mask_via_double_dephasing(const DensityMatrix& sigma, int d, const DensityMatrix& rho,
                                                const Tolerances& tol) {
  const DephasingPlan plan = plan_catalytic_dephasing(sigma, d, tol);
  const int s = plan.system_dim();
  if (rho.dim() != s) {
    std::ostringstream msg;
    msg << "double dephasing acts on " << s << " levels, input has " << rho.dim();
    throw DimensionMismatch(msg.str());
  }
  const int m = plan.register_dim();
  const int n = plan.catalyst_dim();
  const long total = static_cast<long>(s) * m * n * m * n;
  if (total > kMaxDoubleDephasingDim) {
    std::ostringstream msg;
    msg << "double dephasing joint dimension " << total << " exceeds " << kMaxDoubleDephasingDim;
    throw LimitExceeded(msg.str());
  }

  // A' is never touched again, so each source enters as Tr_{A'}[J sigma J^dagger] on [B', B].
  const Matrix& j = plan.embed_isometry;
  const auto lifted = DensityMatrix::trusted(j * sigma.matrix() * j.adjoint(), {m, m, n});
  const Matrix source = partial_trace(lifted, {1, 2}).matrix();

  const std::vector<int> dims{s, m, n, m, n};
  Matrix state = kron(rho.matrix(), kron(source, source));
  const auto apply = [&](const Matrix& op, std::vector<int> targets) {
    const Matrix full = embed_operator(op, dims, targets);
    state = full * state * full.adjoint();
  };
  apply(plan.system_unitary, {0, 2});
  apply(dft_matrix(s), {0});
  apply(plan.system_unitary, {0, 4});

  const auto joint = DensityMatrix::trusted(state, dims);
  DensityMatrix system = partial_trace(joint, {0});
  const double deviation =
      max_abs_diff(system.matrix(), Matrix::Identity(s, s) / static_cast<double>(s));
  return DoubleDephasingResult{std::move(system), partial_trace(joint, {1, 2, 3, 4}), deviation};
}

}  // namespace minent
