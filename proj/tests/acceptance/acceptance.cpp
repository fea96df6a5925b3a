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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "minent/dephasing.hpp"
#include "minent/entropy.hpp"
#include "minent/errors.hpp"
#include "minent/masking.hpp"
#include "minent/pst.hpp"
#include "minent/transition.hpp"
#include "oracles.hpp"

namespace {

using namespace minent;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

DensityMatrix capped_state(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_state(RandomKind::spectrum_fixed, {n}, seed, oracle::random_probs_capped(n, 1.0 / d, rng));
}

BipartitePureState rotated_pad(const std::vector<double>& coeffs, std::mt19937_64& rng) {
  const int n = static_cast<int>(coeffs.size());
  Vector v = Vector::Zero(static_cast<long>(n) * n);
  for (int k = 0; k < n; ++k) v(static_cast<long>(k) * n + k) = std::sqrt(coeffs[k]);
  return schmidt_decompose(kron(oracle::random_unitary(n, rng), oracle::random_unitary(n, rng)) * v, n, n);
}

BipartitePureState tensor_pad(const BipartitePureState& x, const BipartitePureState& y) {
  const int a1 = x.dim_a(), b1 = x.dim_b(), a2 = y.dim_a(), b2 = y.dim_b();
  Vector v(static_cast<long>(a1) * a2 * b1 * b2);
  for (int i = 0; i < a1; ++i)
    for (int j = 0; j < b1; ++j)
      for (int k = 0; k < a2; ++k)
        for (int l = 0; l < b2; ++l)
          v(((static_cast<long>(i) * a2 + k) * b1 + j) * b2 + l) = x.amplitudes()(i * b1 + j) * y.amplitudes()(k * b2 + l);
  return schmidt_decompose(v, a1 * a2, b1 * b2);
}

void entropy_goldens(Verdict& v) {
  const Spectrum s({0.7730, 0.1135, 0.1135});
  const double s1 = renyi_entropy(s, 1.0);
  const double smin = min_entropy(s);
  v.require(std::abs(s1 - 1.0) <= 1e-3, "S_1");
  v.require(std::abs(smin - 0.3716) <= 1e-3, "S_min");
  double worst = 0.0;
  for (int n = 3; n <= 8; ++n) {
    std::vector<double> p;
    for (int k = 1; k <= n; ++k) p.push_back(std::ldexp(1.0, -k));
    p.push_back(std::ldexp(1.0, -n));
    worst = std::max(worst, std::abs(min_entropy(Spectrum(p)) - 1.0));
  }
  v.require(worst <= 1e-9, "geometric tails");
  v.detail << "S_1=" << s1 << " S_min=" << smin << " tail_dev=" << worst;
}

void pst_boundary(Verdict& v) {
  for (int d : {3, 4, 5}) {
    auto spectrum = [d](double eps) {
      std::vector<double> p{1.0 / d + eps};
      for (int k = 0; k < d; ++k) p.push_back((1.0 - p[0]) / d);
      return BipartitePureState::from_schmidt(p, d + 1, d + 1);
    };
    bool accepted = true;
    try {
      plan_pst(spectrum(-1e-6), d);
    } catch (const Error&) {
      accepted = false;
    }
    bool rejected = false;
    try {
      plan_pst(spectrum(1e-6), d);
    } catch (const InfeasiblePad&) {
      rejected = true;
    }
    v.require(accepted && rejected, "d=" + std::to_string(d));
  }
  v.detail << "d in {3,4,5} at 1/d -+ 1e-6";
}

void pst_end_to_end(Verdict& v) {
  const auto proto = plan_pst(BipartitePureState::from_schmidt(std::vector<double>{0.25, 0.25, 0.25, 0.125, 0.125}, 5, 5), 3);
  std::vector<DensityMatrix> sent;
  double min_fid = 1.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto psi = random_state(RandomKind::haar_pure, {3}, 1000 + s);
    const auto enc = pst_encode(proto, psi);
    sent.push_back(enc.transmitted);
    min_fid = std::min(min_fid, fidelity(pst_recover(proto, enc.joint), psi));
  }
  double max_dist = 0.0;
  for (std::size_t a = 0; a < sent.size(); ++a)
    for (std::size_t b = a + 1; b < sent.size(); ++b)
      max_dist = std::max(max_dist, oracle::trace_norm_half(sent[a].matrix() - sent[b].matrix()));
  v.require(min_fid >= 1.0 - 1e-9, "fidelity");
  v.require(max_dist <= 1e-9, "eavesdropper distance");
  v.detail << "min_fidelity=" << min_fid << " max_pairwise_distance=" << max_dist;
}

void instrument_soundness(Verdict& v) {
  double completeness = 0.0;
  double flatness = 0.0;
  for (int d : {2, 3}) {
    std::mt19937_64 rng(40 + d);
    for (int t = 0; t < 50; ++t) {
      const int n = d + 1 + t % 3;
      const auto pad = rotated_pad(oracle::random_probs_capped(n, 1.0 / d, rng), rng);
      const auto inst = build_instrument(pad, d);
      const Matrix rho_a = oracle::partial_trace(pad.density().matrix(), {n, n}, {0});
      Matrix sum = Matrix::Zero(n, n);
      for (std::size_t i = 0; i < inst.kraus.size(); ++i) {
        const Matrix& k = inst.kraus[i];
        sum += k.adjoint() * k;
        flatness = std::max(flatness, max_abs_diff(k * rho_a * k.adjoint(), inst.probs[i] * inst.target_state_a()));
      }
      if (inst.kernel_projector) sum += inst.kernel_projector->adjoint() * *inst.kernel_projector;
      completeness = std::max(completeness, max_abs_diff(sum, Matrix::Identity(n, n)));
    }
  }
  v.require(completeness <= 1e-12, "completeness");
  v.require(flatness <= 1e-10, "flat branches");
  v.detail << "completeness=" << completeness << " branch_dev=" << flatness << " over 100 pads";
}

void masker_security(Verdict& v) {
  double marginal = 0.0;
  double min_fid = 1.0;
  for (int d : {3, 4, 5, 7, 8, 9}) {
    const auto scheme = build_masking_scheme(d);
    const Matrix uniform = Matrix::Identity(d, d) / static_cast<double>(d);
    for (const auto& psi : tomographic_states(d)) {
      const Matrix m = mask_state(scheme, psi).matrix();
      marginal = std::max(marginal, max_abs_diff(oracle::partial_trace(m, {d, d}, {0}), uniform));
      marginal = std::max(marginal, max_abs_diff(oracle::partial_trace(m, {d, d}, {1}), uniform));
    }
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto psi = random_state(RandomKind::haar_pure, {d}, 7000 + s);
      min_fid = std::min(min_fid, fidelity(partial_trace(decode_canonical(scheme, psi), {0}), psi));
    }
  }
  v.require(marginal <= 1e-10, "marginals");
  v.require(min_fid >= 1.0 - 1e-10, "decoder");
  v.detail << "marginal_dev=" << marginal << " min_fidelity=" << min_fid;
}

void masking_information(Verdict& v) {
  for (int d : {3, 5}) {
    const auto diag = masking_diagnostics(build_masking_scheme(d));
    v.require(diag.i_ra <= 1e-8 && diag.i_rb <= 1e-8, "I(R:A), I(R:B) d=" + std::to_string(d));
    v.require(std::abs(diag.i_rab - 2 * std::log2(static_cast<double>(d))) <= 1e-8, "I(R:AB) d=" + std::to_string(d));
    v.detail << "d=" << d << " I(R:A)=" << diag.i_ra << " I(R:B)=" << diag.i_rb << " I(R:AB)=" << diag.i_rab << "; ";
  }
}

void dephasing_unitary(Verdict& v) {
  double off = 0.0;
  double catalyst = 0.0;
  double spread = 0.0;
  for (int d : {2, 3}) {
    const Matrix u = optimal_dephasing_unitary(d);
    const int n = d * d;
    std::vector<DensityMatrix> comps;
    for (std::uint64_t s = 0; s < 20; ++s) {
      std::mt19937_64 rng(300 + s);
      const auto rho = DensityMatrix::trusted(oracle::ginibre_state(n, rng), {n});
      const Matrix joint = u * kron(rho.matrix(), Matrix(Matrix::Identity(d, d) / d)) * u.adjoint();
      off = std::max(off, oracle::off_diagonal(oracle::partial_trace(joint, {n, d}, {0})));
      const Matrix cat = oracle::partial_trace(joint, {n, d}, {1});
      catalyst = std::max(catalyst, max_abs_diff(cat, Matrix::Identity(d, d) / d));
      for (const auto& c : comps) spread = std::max(spread, oracle::trace_norm_half(c.matrix() - cat));
      comps.push_back(DensityMatrix::trusted(cat, {d}));
    }
  }
  v.require(off <= 1e-12, "off-diagonals");
  v.require(catalyst <= 1e-12, "catalyst marginal");
  v.require(spread <= 1e-10, "complement constant");
  v.detail << "off_diag=" << off << " catalyst_dev=" << catalyst << " complement_spread=" << spread;
}

void min_entropy_equation(Verdict& v) {
  double equality = 0.0;
  double violation = -1.0;
  for (int d : {2, 3}) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto sigma = capped_state(d + 1 + static_cast<int>(s % 3), d, 500 + s);
      const auto plan = plan_catalytic_dephasing(sigma, d);
      Matrix kappa = Matrix::Zero(plan.register_dim(), plan.register_dim());
      double branch = 0.0;
      for (int i = 0; i < plan.register_dim(); ++i) {
        kappa(i, i) = plan.instrument.probs[i];
        branch = std::max(branch, plan.instrument.probs[i] / d);
      }
      const double lhs = oracle::lambda_max(kron(plan.catalyst.matrix(), kappa));
      equality = std::max(equality, std::abs(lhs - branch));
      violation = std::max(violation, branch - oracle::lambda_max(sigma.matrix()));
      v.require(check_min_entropy_nondecrease(plan).report.pass(), "library check");
    }
  }
  v.require(equality <= 1e-10, "equality");
  v.require(violation <= 1e-10, "inequality");
  v.detail << "equality_dev=" << equality << " worst_slack=" << violation << " over 40 precatalysts";
}

void catalyst_recovery(Verdict& v) {
  const auto sigma = DensityMatrix::diagonal(std::vector<double>{0.5, 0.25, 0.125, 0.125});
  const auto plan = plan_catalytic_dephasing(sigma, 2);
  const double rec = max_abs_diff(recover_catalyst(plan).catalyst.matrix(), sigma.matrix());
  const auto run = run_dephasing(plan, random_state(RandomKind::ginibre_mixed, {4}, 17));
  double worst = 0.0;
  for (const auto& o : collapse_to_standard(plan, run.joint).outcomes) {
    if (o.skipped) continue;
    worst = std::max(worst, oracle::trace_norm_half(o.catalyst->matrix() - plan.catalyst.matrix()));
  }
  v.require(rec <= 1e-12, "recovery");
  v.require(worst <= 1e-10, "collapse");
  v.detail << "recovery_dev=" << rec << " collapse_distance=" << worst;
}

void double_dephasing(Verdict& v) {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto rho = random_state(RandomKind::ginibre_mixed, {4}, 800 + s);
    const auto r = mask_via_double_dephasing(DensityMatrix::maximally_mixed(2), 2, rho);
    worst = std::max(worst, max_abs_diff(r.system.matrix(), Matrix::Identity(4, 4) / 4.0));
  }
  v.require(worst <= 1e-10, "output I/4");
  v.detail << "max_dev=" << worst;
}

void transitions(Verdict& v) {
  const auto diag = [](std::vector<double> p) { return DensityMatrix::diagonal(p); };
  const auto plan = plan_transition(diag({0.5, 0.3, 0.1, 0.1}), diag({0.4, 0.3, 0.2, 0.1}), DensityMatrix::maximally_mixed(2));
  const double dist = oracle::trace_norm_half(execute(plan).output.matrix() - plan.target.matrix());
  v.require(dist <= 1e-10, "execution");
  bool not_majorized = false;
  try {
    plan_transition(diag({0.4, 0.3, 0.2, 0.1}), diag({0.5, 0.2, 0.2, 0.1}), DensityMatrix::maximally_mixed(2));
  } catch (const NotMajorized&) {
    not_majorized = true;
  }
  bool insufficient = false;
  try {
    plan_transition(diag({0.5, 0.3, 0.1, 0.1}), diag({0.4, 0.3, 0.2, 0.1}), diag({0.6, 0.4}));
  } catch (const InsufficientCatalyst&) {
    insufficient = true;
  }
  v.require(not_majorized, "NotMajorized");
  v.require(insufficient, "InsufficientCatalyst");
  v.detail << "trace_distance=" << dist;
}

void superadditivity(Verdict& v) {
  std::mt19937_64 rng(2026);
  int mask_violations = 0;
  int pst_violations = 0;
  for (int t = 0; t < 200; ++t) {
    const int n1 = 2 + t % 3;
    const int n2 = 2 + (t / 3) % 3;
    const auto a = random_state(RandomKind::spectrum_fixed, {n1}, 3 * t, oracle::random_probs_capped(n1, 0.55, rng));
    const auto b = random_state(RandomKind::spectrum_fixed, {n2}, 3 * t + 1, oracle::random_probs_capped(n2, 0.55, rng));
    if (masking_power(tensor(a, b)) < masking_power(a) * masking_power(b)) ++mask_violations;
    const auto x = rotated_pad(oracle::random_probs(n1, rng), rng);
    const auto y = rotated_pad(oracle::random_probs(n2, rng), rng);
    if (pst_power(tensor_pad(x, y)) < pst_power(x) + pst_power(y) - 1e-9) ++pst_violations;
  }
  v.require(mask_violations == 0, "masking power");
  v.require(pst_violations == 0, "pst power");
  v.detail << "violations masking=" << mask_violations << " pst=" << pst_violations << " over 200 pairs each";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"entropy golden values", entropy_goldens},
      {"pst feasibility boundary", pst_boundary},
      {"pst end-to-end", pst_end_to_end},
      {"instrument soundness", instrument_soundness},
      {"masker security", masker_security},
      {"masking diagnostics", masking_information},
      {"optimal dephasing unitary", dephasing_unitary},
      {"catalyst min-entropy equation", min_entropy_equation},
      {"catalyst recovery and collapse", catalyst_recovery},
      {"double-dephasing masker", double_dephasing},
      {"state transitions", transitions},
      {"superadditivity suites", superadditivity},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      criteria[k].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    failures += v.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), v.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
