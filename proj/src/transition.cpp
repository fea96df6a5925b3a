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


#include "minent/transition.hpp"

#include <cmath>
#include <sstream>

#include "minent/entropy.hpp"
#include "minent/errors.hpp"

namespace minent {

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << "source has dimension " << a.dim() << ", target " << b.dim();
    throw DimensionMismatch(msg.str());
  }
}

int ceil_sqrt(int n) {
  int d = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (d * d < n) ++d;
  while (d > 1 && (d - 1) * (d - 1) >= n) --d;
  return d;
}

Matrix embedding(int dim, int levels) { return Matrix::Identity(levels, dim); }

}  // namespace

bool transition_feasible(const DensityMatrix& source, const DensityMatrix& target, const Tolerances& tol) {
  require_same_dim(source, target);
  return majorizes(source.spectrum(tol), target.spectrum(tol), tol);
}

Json CatalystRequirement::to_json() const {
  return Json{{"dim", dim},
              {"d", d},
              {"sufficient_bits", sufficient_bits},
              {"necessary_bits", necessary_bits},
              {"perfect_square", perfect_square}};
}

CatalystRequirement catalyst_requirement(int dim) {
  if (dim < 2) throw InvalidInput("catalyst_requirement: dimension must be at least 2");
  CatalystRequirement r;
  r.dim = dim;
  r.d = ceil_sqrt(dim);
  r.perfect_square = r.d * r.d == dim;
  r.sufficient_bits = std::log2(static_cast<double>(r.d));
  r.necessary_bits = std::log2(static_cast<double>(dim)) / 2.0;
  return r;
}

Json TransitionPlan::to_json() const {
  return Json{{"source", minent::to_json(source)},
              {"target", minent::to_json(target)},
              {"u1", matrix_to_json(u1)},
              {"u2", matrix_to_json(u2)},
              {"requirement", requirement.to_json()},
              {"dephasing", dephasing.to_json()}};
}

TransitionPlan plan_transition(const DensityMatrix& source, const DensityMatrix& target, const DensityMatrix& sigma,
                               const Tolerances& tol) {
  require_same_dim(source, target);
  const Spectrum lambda = source.spectrum(tol);
  const Spectrum mu = target.spectrum(tol);
  if (!majorizes(lambda, mu, tol)) {
    std::ostringstream msg;
    msg.precision(6);
    double ps = 0.0;
    double pt = 0.0;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      ps += lambda[k];
      pt += mu[k];
      if (pt > ps + tol.major) {
        msg << "target is not majorized by source: partial sum " << k + 1 << " of target " << pt << " > " << ps;
        break;
      }
    }
    throw NotMajorized(msg.str());
  }
  const CatalystRequirement req = catalyst_requirement(static_cast<int>(source.dim()));
  const double lmax = sigma.spectrum(tol).max();
  if (lmax > 1.0 / req.d + tol.major) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "catalyst too weak for a " << req.dim << "-level transition: S_min = " << -std::log2(lmax)
        << " bits < required " << req.sufficient_bits << " bits";
    throw InsufficientCatalyst(msg.str(), req.sufficient_bits);
  }
  DephasingPlan dephasing = plan_catalytic_dephasing(sigma, req.d, tol);

  const Matrix w_source = purify(source, tol).schmidt().basis_a;
  const Matrix w_target = purify(target, tol).schmidt().basis_a;
  const Matrix v = schur_horn_unitary(lambda, mu.values(), tol);
  return TransitionPlan{.source = source,
                        .target = target,
                        .u1 = v * w_source.adjoint(),
                        .u2 = w_target,
                        .requirement = req,
                        .dephasing = std::move(dephasing)};
}

TransitionRun execute(const TransitionPlan& plan, const DensityMatrix& rho) {
  const int dim = plan.dim();
  if (rho.dim() != dim) {
    std::ostringstream msg;
    msg << "transition acts on " << dim << " levels, input has " << rho.dim();
    throw DimensionMismatch(msg.str());
  }
  const int levels = plan.dephasing.system_dim();
  const Matrix e = embedding(dim, levels);
  const Matrix rotated = plan.u1 * rho.matrix() * plan.u1.adjoint();
  DephasingRun run = run_dephasing(plan.dephasing, DensityMatrix::trusted(e * rotated * e.adjoint(), {levels}));
  const Matrix back = e.adjoint() * run.system_out.matrix() * e;
  auto output = DensityMatrix::trusted(plan.u2 * back * plan.u2.adjoint(), {dim});
  return TransitionRun{.output = std::move(output), .dephasing = std::move(run)};
}

VerificationReport verify_transition(const TransitionPlan& plan, const Tolerances& tol) {
  VerificationReport report;
  const Spectrum mu = plan.target.spectrum(tol);
  const Matrix rotated = plan.u1 * plan.source.matrix() * plan.u1.adjoint();
  double diag_dev = 0.0;
  for (int k = 0; k < plan.dim(); ++k) diag_dev = std::max(diag_dev, std::abs(rotated(k, k).real() - mu[k]));
  report.add("u1_diagonal", diag_dev, 1e-10);

  Matrix diag_mu = Matrix::Zero(plan.dim(), plan.dim());
  for (int k = 0; k < plan.dim(); ++k) diag_mu(k, k) = mu[k];
  report.add("u2_target", max_abs_diff(plan.u2 * diag_mu * plan.u2.adjoint(), plan.target.matrix()), tol.eq);
  report.add("executed_trace_distance", trace_distance(execute(plan).output, plan.target), 1e-10);
  return report;
}

}  // namespace minent
