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

#include "minent/nielsen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "minent/errors.hpp"

namespace minent {

namespace {

// rows a, columns b: amplitude of |a>|b>
Matrix reshape_pad(const Vector& amps, int dim_a, int dim_b) {
  Matrix m(dim_a, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) m(a, b) = amps(static_cast<Eigen::Index>(a) * dim_b + b);
  }
  return m;
}

Vector flatten(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    for (Eigen::Index b = 0; b < m.cols(); ++b) v(a * m.cols() + b) = m(a, b);
  }
  return v;
}

int numerical_rank(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const RealVector& s = svd.singularValues();
  if (s.size() == 0) return 0;
  const double cut = 1e-10 * std::max(1.0, s(0));
  return static_cast<int>((s.array() > cut).count());
}

}  // namespace

Matrix NielsenInstrument::target_state_a() const {
  return target_basis_a * target_basis_a.adjoint() / static_cast<double>(d);
}

Vector NielsenInstrument::target_pad() const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_a) * dim_b);
  for (int r = 0; r < d; ++r) {
    v += kron(Vector(target_basis_a.col(r)), Vector(target_basis_b.col(r)));
  }
  return v / std::sqrt(static_cast<double>(d));
}

Json NielsenInstrument::to_json() const {
  Json k = Json::array();
  for (const auto& m : kraus) k.push_back(matrix_to_json(m));
  Json u = Json::array();
  for (const auto& m : corrections) u.push_back(matrix_to_json(m));
  Json out{{"d", d}, {"kraus", std::move(k)}, {"corrections", std::move(u)}, {"probs", probs}};
  if (kernel_projector) out["kernel_projector"] = matrix_to_json(*kernel_projector);
  return out;
}

NielsenInstrument build_instrument(const BipartitePureState& pad, int d, const Tolerances& tol) {
  if (d <= 0) throw InvalidInput("target dimension d must be positive");
  const Spectrum lambda = pad.marginal_spectrum(tol);
  if (lambda.max() > 1.0 / d + tol.major) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "pad cannot carry a " << d << "-dimensional state: lambda_max = " << lambda.max()
        << " > 1/" << d << " (S_min = " << min_entropy(lambda) << " < log2 " << d << " bits)";
    throw InfeasiblePad(msg.str());
  }
  const auto& sd = pad.schmidt();

  NielsenInstrument inst;
  inst.d = d;
  inst.dim_a = pad.dim_a();
  inst.dim_b = pad.dim_b();
  inst.decomposition = uniform_subset_decompose(lambda, d, tol);
  inst.target_basis_a = sd.basis_a.leftCols(d);
  inst.target_basis_b = sd.basis_b.leftCols(d);

  const Matrix full_b = complete_basis(sd.basis_b);
  for (const auto& term : inst.decomposition.terms) {
    Matrix k = Matrix::Zero(inst.dim_a, inst.dim_a);
    for (int r = 0; r < d; ++r) {
      const int idx = term.subset[static_cast<std::size_t>(r)];
      const double scale = std::sqrt(term.weight / (d * lambda[static_cast<std::size_t>(idx)]));
      k += scale * sd.basis_a.col(r) * sd.basis_a.col(idx).adjoint();
    }
    inst.kraus.push_back(std::move(k));
    inst.probs.push_back(term.weight);

    // |b_k> -> |b_rank(k)> for k in the subset; leftovers fill the rest in order
    std::vector<int> perm(static_cast<std::size_t>(inst.dim_b), -1);
    std::vector<bool> source_used(perm.size(), false);
    for (int r = 0; r < d; ++r) {
      const int idx = term.subset[static_cast<std::size_t>(r)];
      perm[static_cast<std::size_t>(idx)] = r;
      source_used[static_cast<std::size_t>(idx)] = true;
    }
    int next_target = d;
    for (std::size_t s = 0; s < perm.size(); ++s) {
      if (!source_used[s]) perm[s] = next_target++;
    }
    inst.corrections.push_back(full_b * permutation_matrix(perm) * full_b.adjoint());
  }

  const int support = pad.schmidt_rank();
  Matrix supp = Matrix::Zero(inst.dim_a, inst.dim_a);
  for (int k = 0; k < support; ++k) supp += sd.basis_a.col(k) * sd.basis_a.col(k).adjoint();
  const Matrix kernel = Matrix::Identity(inst.dim_a, inst.dim_a) - supp;
  if (support < inst.dim_a) inst.kernel_projector = kernel;
  return inst;
}

InstrumentOutput apply_instrument(const NielsenInstrument& inst, const DensityMatrix& state) {
  if (state.dim() != inst.dim_a) {
    std::ostringstream msg;
    msg << "instrument acts on dimension " << inst.dim_a << ", state has " << state.dim();
    throw DimensionMismatch(msg.str());
  }
  const int m = inst.register_dim();
  const int n = inst.dim_a;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(n) * m, static_cast<Eigen::Index>(n) * m);
  double kernel_weight = 0.0;
  for (int i = 0; i < m; ++i) {
    const Matrix& k = i < static_cast<int>(inst.kraus.size()) ? inst.kraus[i] : *inst.kernel_projector;
    const Matrix branch = k * state.matrix() * k.adjoint();
    if (i >= static_cast<int>(inst.kraus.size())) kernel_weight = branch.trace().real();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) out(a * m + i, b * m + i) = branch(a, b);
    }
  }
  return {DensityMatrix::trusted(std::move(out), {n, m}), kernel_weight};
}

VerificationReport verify_instrument(const NielsenInstrument& inst, const BipartitePureState& pad,
                                     const Tolerances& tol) {
  VerificationReport report;
  if (pad.dim_a() != inst.dim_a || pad.dim_b() != inst.dim_b) {
    report.add("dimensions", 1.0, 0.0);
    return report;
  }
  const int na = inst.dim_a;
  const Matrix psi = reshape_pad(pad.amplitudes(), na, inst.dim_b);
  const Matrix psi_a = psi * psi.adjoint();
  const Matrix phi_a = inst.target_state_a();

  Matrix completeness = Matrix::Zero(na, na);
  for (const auto& k : inst.kraus) completeness += k.adjoint() * k;
  if (inst.kernel_projector) completeness += inst.kernel_projector->adjoint() * *inst.kernel_projector;
  report.add("completeness", max_abs_diff(completeness, Matrix::Identity(na, na)), tol.eq);

  double branch_dev = 0.0;
  double weight_dev = 0.0;
  double rank_dev = 0.0;
  double unitary_dev = 0.0;
  for (std::size_t i = 0; i < inst.kraus.size(); ++i) {
    const Matrix out = inst.kraus[i] * psi_a * inst.kraus[i].adjoint();
    branch_dev = std::max(branch_dev, max_abs_diff(out, inst.probs[i] * phi_a));
    weight_dev = std::max(weight_dev, std::abs(out.trace().real() - inst.probs[i]));
    rank_dev = std::max(rank_dev, std::abs(static_cast<double>(numerical_rank(inst.kraus[i]) - inst.d)));
    unitary_dev = std::max(unitary_dev, unitarity_defect(inst.corrections[i]));
  }
  const double psum = std::accumulate(inst.probs.begin(), inst.probs.end(), 0.0);
  report.add("branch_output", branch_dev, tol.eq);
  report.add("branch_weight", std::max(weight_dev, std::abs(psum - 1.0)), tol.eq);
  report.add("kraus_rank", rank_dev, 0.0);
  report.add("correction_unitarity", unitary_dev, tol.eq);

  // sum_i (K_i (x) U_i)|Psi><Psi|(K_i (x) U_i)^dagger against the target pad
  const Vector target = inst.target_pad();
  Matrix converted = Matrix::Zero(target.size(), target.size());
  for (std::size_t i = 0; i < inst.kraus.size(); ++i) {
    const Vector w = flatten(inst.kraus[i] * psi * inst.corrections[i].transpose());
    converted += w * w.adjoint();
  }
  if (inst.kernel_projector) {
    const Vector w = flatten(*inst.kernel_projector * psi);
    converted += w * w.adjoint();
  }
  report.add("pad_conversion", max_abs_diff(converted, target * target.adjoint()), tol.eq);

  // Xi(Psi_A) = Phi_A (x) diag(p): no A-C cross terms
  const auto xi = apply_instrument(inst, DensityMatrix::trusted(psi_a, {na}));
  std::vector<double> weights = inst.probs;
  if (inst.kernel_projector) weights.push_back(0.0);
  RealVector wv(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) wv(static_cast<Eigen::Index>(i)) = weights[i];
  const Matrix expected = kron(phi_a, Matrix(wv.cast<Complex>().asDiagonal()));
  report.add("instrument_product_output", max_abs_diff(xi.state.matrix(), expected), tol.eq);
  return report;
}

}  // namespace minent
