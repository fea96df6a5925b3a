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


#include "minent/dephasing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "minent/entropy.hpp"
#include "minent/errors.hpp"

namespace minent {

namespace {

constexpr long kMaxJointDim = 2048;

Complex root_of_unity(long exponent, int d) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(exponent % d) / d);
}

Matrix diagonal_part(const Matrix& m) {
  return Matrix(m.diagonal().asDiagonal());
}

std::vector<Matrix> branch_operators(const NielsenInstrument& inst) {
  std::vector<Matrix> ks = inst.kraus;
  if (inst.kernel_projector) ks.push_back(*inst.kernel_projector);
  return ks;
}

// (I (x) v^dagger (x) I) as a (left*right) x (left*m*right) matrix
Matrix contract_middle(const Vector& v, long left, long right) {
  const Matrix row = v.adjoint();
  return kron(kron(Matrix::Identity(left, left), row), Matrix::Identity(right, right));
}

}  // namespace

Matrix optimal_dephasing_unitary(int d) {
  if (d < 2) throw InvalidInput("optimal_dephasing_unitary: d must be at least 2");
  const long n = static_cast<long>(d) * d * d;
  Matrix u = Matrix::Zero(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const long col = (static_cast<long>(i) * d + j) * d + k;
        const long row = (static_cast<long>(i) * d + j) * d + (k + i) % d;
        u(row, col) = root_of_unity(static_cast<long>(j) * k, d);
      }
    }
  }
  return u;
}

Matrix naive_dephasing_unitary(int dim) {
  if (dim < 2) throw InvalidInput("naive_dephasing_unitary: dimension must be at least 2");
  const long n = static_cast<long>(dim) * dim;
  Matrix u = Matrix::Zero(n, n);
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) u(j * dim + k, j * dim + k) = root_of_unity(static_cast<long>(j) * k, dim);
  }
  return u;
}

namespace {

DensityMatrix unitary_with_uniform_catalyst(const Matrix& u, int catalyst_dim, const DensityMatrix& rho,
                                            int keep) {
  const long n = rho.dim() * catalyst_dim;
  if (u.rows() != n || u.cols() != n) {
    throw DimensionMismatch("unitary size does not match system (x) catalyst dimension");
  }
  const Matrix joint = kron(rho.matrix(), Matrix::Identity(catalyst_dim, catalyst_dim) / catalyst_dim);
  const Matrix out = u * joint * u.adjoint();
  const int sys = static_cast<int>(rho.dim());
  return partial_trace(DensityMatrix::trusted(out, {sys, catalyst_dim}), {keep});
}

}  // namespace

DensityMatrix induced_channel_output(const Matrix& u, int catalyst_dim, const DensityMatrix& rho) {
  return unitary_with_uniform_catalyst(u, catalyst_dim, rho, 0);
}

DensityMatrix complementary_output(const Matrix& u, int catalyst_dim, const DensityMatrix& rho) {
  return unitary_with_uniform_catalyst(u, catalyst_dim, rho, 1);
}

std::vector<int> DephasingPlan::joint_dims() const {
  const int m = register_dim();
  return {system_dim(), m, m, catalyst_dim()};
}

Json DephasingPlan::to_json() const {
  Json corrections = Json::array();
  for (const auto& r : catalyst_corrections) corrections.push_back(matrix_to_json(r));
  return Json{{"d", d},
              {"precatalyst", minent::to_json(precatalyst)},
              {"instrument", instrument.to_json()},
              {"embed_isometry", matrix_to_json(embed_isometry)},
              {"dephase_unitary", matrix_to_json(dephase_unitary)},
              {"catalyst_corrections", std::move(corrections)},
              {"leftover", minent::to_json(leftover)},
              {"catalyst", minent::to_json(catalyst)},
              {"register_map", {{"order", {"S", "A'", "B'", "B"}}, {"dims", joint_dims()}}}};
}

DephasingPlan plan_catalytic_dephasing(const DensityMatrix& sigma, int d, const Tolerances& tol) {
  if (d < 2) throw InvalidInput("catalytic dephasing needs d >= 2");
  const Spectrum spec = sigma.spectrum(tol);
  if (spec.max() > 1.0 / d + tol.major) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "precatalyst cannot dephase " << d * d << "-level systems: lambda_max = " << spec.max()
        << " > 1/" << d << " (S_min = " << min_entropy(spec) << " < log2 " << d << " bits)";
    throw InfeasibleSOR(msg.str());
  }
  const BipartitePureState pad = purify(sigma, tol);
  NielsenInstrument inst = build_instrument(pad, d, tol);
  const int n = inst.dim_a;
  const int m = inst.register_dim();
  const std::vector<Matrix> ks = branch_operators(inst);
  Matrix j = Matrix::Zero(static_cast<long>(m) * m * n, n);
  std::vector<double> weights;
  for (int i = 0; i < m; ++i) {
    j.block((static_cast<long>(i) * m + i) * n, 0, n, n) = ks[i];
    weights.push_back(std::max(0.0, (ks[i] * sigma.matrix() * ks[i].adjoint()).trace().real()));
  }

  // U_i acts on the reference; move it onto sigma's space through the Schmidt bases.
  const Matrix full_a = complete_basis(pad.schmidt().basis_a);
  const Matrix full_b = complete_basis(pad.schmidt().basis_b);
  std::vector<Matrix> corrections;
  for (const auto& u : inst.corrections) {
    corrections.push_back(full_a * (full_b.adjoint() * u * full_b) * full_a.adjoint());
  }
  if (inst.kernel_projector) corrections.push_back(Matrix::Identity(n, n));

  const Matrix u = optimal_dephasing_unitary(d);
  const Matrix& e = inst.target_basis_a;
  const long s = static_cast<long>(d) * d;
  const Matrix id_s = Matrix::Identity(s, s);
  const Matrix w = kron(id_s, e.leftCols(d)) * u * kron(id_s, Matrix(e.adjoint())) +
                   kron(id_s, Matrix(Matrix::Identity(n, n) - e * e.adjoint()));

  DensityMatrix kappa = DensityMatrix::diagonal(weights);
  DensityMatrix phi = DensityMatrix::trusted(inst.target_state_a(), {n});
  return DephasingPlan{.d = d,
                       .precatalyst = sigma,
                       .instrument = std::move(inst),
                       .embed_isometry = std::move(j),
                       .dephase_unitary = u,
                       .system_unitary = w,
                       .catalyst_corrections = std::move(corrections),
                       .leftover = std::move(kappa),
                       .catalyst = std::move(phi)};
}

VerificationReport verify_plan(const DephasingPlan& plan, const Tolerances& tol) {
  VerificationReport report;
  const int n = plan.catalyst_dim();
  const int m = plan.register_dim();
  const Matrix& j = plan.embed_isometry;
  report.add("isometry", max_abs_diff(j.adjoint() * j, Matrix::Identity(n, n)), tol.eq);
  report.add("system_unitary", unitarity_defect(plan.system_unitary), tol.eq);

  const auto lifted = DensityMatrix::trusted(j * plan.precatalyst.matrix() * j.adjoint(), {m, m, n});
  const auto reduced = partial_trace(lifted, {0, 2});
  report.add("leftover_product", max_abs_diff(reduced.matrix(), kron(plan.leftover.matrix(), plan.catalyst.matrix())),
             tol.eq);

  double weight_dev = 0.0;
  const auto& probs = plan.instrument.probs;
  for (int i = 0; i < m; ++i) {
    const double expected = i < static_cast<int>(probs.size()) ? probs[i] : 0.0;
    weight_dev = std::max(weight_dev, std::abs(plan.leftover.matrix()(i, i).real() - expected));
  }
  report.add("leftover_weights", weight_dev, tol.eq);
  return report;
}

DephasingRun run_dephasing(const DephasingPlan& plan, const DensityMatrix& rho) {
  if (rho.dim() != plan.system_dim()) {
    std::ostringstream msg;
    msg << "dephasing plan acts on " << plan.system_dim() << " levels, input has " << rho.dim();
    throw DimensionMismatch(msg.str());
  }
  const std::vector<int> dims = plan.joint_dims();
  const long total = product(dims);
  if (total > kMaxJointDim) {
    std::ostringstream msg;
    msg << "dephasing joint dimension " << total << " exceeds " << kMaxJointDim;
    throw LimitExceeded(msg.str());
  }
  // J only populates the diagonal branches |i>|i>, so W acts block by block.
  const long n = plan.catalyst_dim();
  const long m = plan.register_dim();
  const long sn = plan.system_dim() * n;
  const Matrix& j = plan.embed_isometry;
  const Matrix& w = plan.system_unitary;
  auto index = [&](long row, long a) { return ((row / n * m + a) * m + a) * n + row % n; };
  Matrix joint = Matrix::Zero(total, total);
  for (long a = 0; a < m; ++a) {
    const Matrix ka = j.middleRows((a * m + a) * n, n);
    for (long b = 0; b < m; ++b) {
      const Matrix kb = j.middleRows((b * m + b) * n, n);
      const Matrix blk = w * kron(rho.matrix(), Matrix(ka * plan.precatalyst.matrix() * kb.adjoint())) * w.adjoint();
      for (long c = 0; c < sn; ++c) {
        for (long r = 0; r < sn; ++r) joint(index(r, a), index(c, b)) = blk(r, c);
      }
    }
  }
  auto state = DensityMatrix::trusted(joint, dims);
  return DephasingRun{.system_out = partial_trace(state, {DephasingPlan::kSystem}),
                      .output_side = partial_trace(state, {DephasingPlan::kSystem, DephasingPlan::kLeftoverA}),
                      .catalyst_out = partial_trace(state, {DephasingPlan::kLeftoverB, DephasingPlan::kCatalyst}),
                      .leftover_out = partial_trace(state, {DephasingPlan::kLeftoverA}),
                      .joint = std::move(state)};
}

VerificationReport verify_run(const DephasingPlan& plan, const DensityMatrix& rho, const DephasingRun& run,
                              const Tolerances& tol) {
  VerificationReport report;
  const Matrix dephased = diagonal_part(rho.matrix());
  const Matrix& kappa = plan.leftover.matrix();
  report.add("system_dephased", max_abs_diff(run.system_out.matrix(), dephased), tol.eq);
  report.add("output_product", max_abs_diff(run.output_side.matrix(), kron(dephased, kappa)), tol.eq);
  report.add("catalyst_constant", max_abs_diff(run.catalyst_out.matrix(), kron(kappa, plan.catalyst.matrix())),
             tol.eq);
  report.add("leftover", max_abs_diff(run.leftover_out.matrix(), kappa), tol.eq);
  return report;
}

Json MinEntropyCheck::to_json() const {
  return Json{{"catalyst_lambda_max", catalyst_max},
              {"branch_max_over_d", branch_max},
              {"precatalyst_lambda_max", source_max},
              {"report", report.to_json()}};
}

MinEntropyCheck check_min_entropy_nondecrease(const DephasingPlan& plan, const Tolerances& tol) {
  (void)tol;
  MinEntropyCheck out;
  const RealVector ev = hermitian_eigenvalues(kron(plan.catalyst.matrix(), plan.leftover.matrix()));
  out.catalyst_max = ev.size() ? ev(ev.size() - 1) : 0.0;
  for (const auto& k : branch_operators(plan.instrument)) {
    const double w = (k * plan.precatalyst.matrix() * k.adjoint()).trace().real();
    out.branch_max = std::max(out.branch_max, w / plan.d);
  }
  out.source_max = plan.precatalyst.spectrum().max();
  out.report.add("equality", std::abs(out.catalyst_max - out.branch_max), 1e-10);
  out.report.add("nondecrease", out.branch_max - out.source_max, 1e-10);
  return out;
}

CatalystRecovery recover_catalyst(const DephasingPlan& plan, std::optional<int> skip) {
  const int n = plan.catalyst_dim();
  const int m = plan.register_dim();
  if (skip && (*skip < 0 || *skip >= m)) throw InvalidInput("recover_catalyst: skip index out of range");
  Matrix control = Matrix::Zero(static_cast<long>(m) * n, static_cast<long>(m) * n);
  for (int i = 0; i < m; ++i) {
    const Matrix r = (skip && *skip == i) ? Matrix(Matrix::Identity(n, n)) : Matrix(plan.catalyst_corrections[i].adjoint());
    control.block(static_cast<long>(i) * n, static_cast<long>(i) * n, n, n) = r;
  }
  const Matrix state = control * kron(plan.leftover.matrix(), plan.catalyst.matrix()) * control.adjoint();

  const Matrix f = dft_matrix(m);
  Matrix dephased = Matrix::Zero(state.rows(), state.cols());
  for (int k = 0; k < m; ++k) {
    const Matrix p = kron(Matrix(f.col(k) * f.col(k).adjoint()), Matrix::Identity(n, n));
    dephased += p * state * p;
  }
  auto joint = DensityMatrix::trusted(dephased, {m, n});
  return CatalystRecovery{.catalyst = partial_trace(joint, {1}), .joint = std::move(joint)};
}

Json CollapseResult::to_json() const {
  Json rows = Json::array();
  for (const auto& o : outcomes) {
    rows.push_back(Json{{"outcome", o.outcome},
                        {"probability", o.probability},
                        {"skipped", o.skipped},
                        {"catalyst_deviation", o.catalyst_deviation},
                        {"system_deviation", o.system_deviation}});
  }
  return Json{{"outcomes", std::move(rows)},
              {"outcome_system_information", outcome_system_information},
              {"report", report.to_json()}};
}

CollapseResult collapse_to_standard(const DephasingPlan& plan, const DensityMatrix& joint,
                                    const std::optional<Matrix>& basis, const Tolerances& tol) {
  const std::vector<int> dims = plan.joint_dims();
  if (joint.dims() != dims) throw DimensionMismatch("collapse_to_standard: joint state does not match the plan");
  const int m = plan.register_dim();
  const Matrix b = basis ? *basis : Matrix(Matrix::Identity(m, m));
  if (b.rows() != m || b.cols() != m || unitarity_defect(b) > tol.eq) {
    throw InvalidInput("collapse_to_standard: outcome basis must be a unitary on the leftover register");
  }
  const int s = plan.system_dim();
  const int n = plan.catalyst_dim();
  const DensityMatrix system = partial_trace(joint, {DephasingPlan::kSystem});

  CollapseResult out;
  Matrix average = Matrix::Zero(s, s);
  double conditional_entropy = 0.0;
  double catalyst_dev = 0.0;
  double system_dev = 0.0;
  for (int f = 0; f < m; ++f) {
    CollapseOutcome o;
    o.outcome = f;
    const Matrix c = contract_middle(b.col(f), static_cast<long>(s) * m, n);
    const Matrix branch = c * joint.matrix() * c.adjoint();
    o.probability = branch.trace().real();
    if (o.probability < 1e-12) {
      o.skipped = true;
      out.outcomes.push_back(std::move(o));
      continue;
    }
    const auto cond = DensityMatrix::trusted(branch / o.probability, {s, m, n});
    o.system = partial_trace(cond, {0});
    o.catalyst = partial_trace(cond, {2});
    o.catalyst_deviation = trace_distance(*o.catalyst, plan.catalyst);
    o.system_deviation = trace_distance(*o.system, system);
    catalyst_dev = std::max(catalyst_dev, o.catalyst_deviation);
    system_dev = std::max(system_dev, o.system_deviation);
    average += o.probability * o.system->matrix();
    conditional_entropy += o.probability * von_neumann_entropy(*o.system);
    out.outcomes.push_back(std::move(o));
  }
  out.outcome_system_information =
      std::max(0.0, von_neumann_entropy(DensityMatrix::trusted(average, {s})) - conditional_entropy);
  out.report.add("catalyst_per_outcome", catalyst_dev, tol.eq);
  out.report.add("system_per_outcome", system_dev, tol.eq);
  out.report.add("outcome_system_information", out.outcome_system_information, 1e-8);
  return out;
}

}  // namespace minent
