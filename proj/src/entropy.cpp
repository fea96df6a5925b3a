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

#include "minent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "minent/errors.hpp"

namespace minent {

double renyi_entropy(const Spectrum& spectrum, double alpha) {
  if (std::isnan(alpha) || alpha < 0.0) throw InvalidInput("Renyi order alpha must be >= 0");
  const auto& p = spectrum.values();
  if (alpha == 0.0) return std::log2(static_cast<double>(spectrum.rank()));
  if (std::isinf(alpha)) return -std::log2(spectrum.max());
  if (alpha == 1.0) {
    double s = 0.0;
    for (double v : p) {
      if (v > 0.0) s -= v * std::log2(v);
    }
    return s;
  }
  double sum = 0.0;
  for (double v : p) {
    if (v > 0.0) sum += std::pow(v, alpha);
  }
  return std::log2(sum) / (1.0 - alpha);
}

double renyi_entropy(const DensityMatrix& state, double alpha, const Tolerances& tol) {
  return renyi_entropy(state.spectrum(tol), alpha);
}

bool majorizes(std::span<const double> x, std::span<const double> y, const Tolerances& tol) {
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  const std::size_t n = std::max(xs.size(), ys.size());
  xs.resize(n, 0.0);
  ys.resize(n, 0.0);
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += xs[k];
    sy += ys[k];
    if (sy > sx + tol.major) return false;
  }
  return true;
}

bool majorizes(const Spectrum& x, const Spectrum& y, const Tolerances& tol) {
  return majorizes(std::span<const double>(x.values()), std::span<const double>(y.values()), tol);
}

// ---------------------------------------------------------------------------

std::vector<double> UniformSubsetDecomposition::reconstruct(std::size_t n) const {
  std::vector<double> out(n, 0.0);
  for (const auto& t : terms) {
    for (int k : t.subset) out[static_cast<std::size_t>(k)] += t.weight / d;
  }
  return out;
}

Json UniformSubsetDecomposition::to_json() const {
  Json arr = Json::array();
  for (const auto& t : terms) arr.push_back(Json{{"p", t.weight}, {"subset", t.subset}});
  return Json{{"d", d}, {"terms", std::move(arr)}};
}

namespace {

// Caps entries at 1/d and spreads the excess over the uncapped support. Only
// reached for spectra inside the tolerance band above 1/d.
void water_fill(std::vector<double>& r, int d) {
  const double cap = 1.0 / d;
  for (int pass = 0; pass < static_cast<int>(r.size()) + 1; ++pass) {
    double excess = 0.0;
    double room = 0.0;
    for (double& v : r) {
      if (v > cap) {
        excess += v - cap;
        v = cap;
      } else if (v > 0.0) {
        room += v;
      }
    }
    if (excess <= 0.0 || room <= 0.0) return;
    for (double& v : r) {
      if (v > 0.0 && v < cap) v += excess * v / room;
    }
  }
}

}  // namespace

UniformSubsetDecomposition uniform_subset_decompose(const Spectrum& lambda, int d,
                                                    const Tolerances& tol) {
  if (d <= 0) throw InvalidInput("target dimension d must be positive");
  const double bound = 1.0 / d;
  if (lambda.max() > bound + tol.major) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "lambda_max = " << lambda.max() << " > 1/" << d << " = " << bound;
    throw InfeasibleSpectrum(msg.str());
  }
  const std::size_t n = lambda.size();
  std::vector<double> r = lambda.values();
  if (lambda.max() > bound) water_fill(r, d);

  constexpr double kResidualZero = 1e-14;
  UniformSubsetDecomposition out;
  out.d = d;
  const std::size_t max_terms = n * (n + 1) / 2;
  std::vector<int> order(n);
  while (out.terms.size() < max_terms) {
    const double t = std::accumulate(r.begin(), r.end(), 0.0);
    if (t <= kResidualZero * d) break;
    order.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (r[k] > 0.0) order.push_back(static_cast<int>(k));
    }
    if (order.size() < static_cast<std::size_t>(d)) break;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return r[a] > r[b]; });
    const double r_d = r[order[d - 1]];
    double p = std::min(d * r_d, t);
    if (order.size() > static_cast<std::size_t>(d)) p = std::min(p, t - d * r[order[d]]);
    if (!(p > 0.0)) break;

    std::vector<int> subset(order.begin(), order.begin() + d);
    for (int k : subset) {
      r[k] -= p / d;
      if (r[k] < kResidualZero) r[k] = 0.0;
    }
    std::sort(subset.begin(), subset.end());
    out.terms.push_back({p, std::move(subset)});
  }

  const double total = std::accumulate(out.terms.begin(), out.terms.end(), 0.0,
                                       [](double acc, const auto& t) { return acc + t.weight; });
  for (auto& t : out.terms) t.weight /= total;

  const auto back = out.reconstruct(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(back[k] - lambda[k]) > std::max(1e-10, 2 * tol.major)) {
      throw std::logic_error("uniform_subset_decompose: reconstruction drifted");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Matrix schur_horn_unitary(const Spectrum& spectrum, std::span<const double> target,
                          const Tolerances& tol) {
  constexpr double kSnap = 1e-14;
  const std::size_t n = spectrum.size();
  if (target.size() != n) {
    throw DimensionMismatch("schur_horn_unitary: target length != spectrum length");
  }
  const double tsum = std::accumulate(target.begin(), target.end(), 0.0);
  if (std::abs(tsum - 1.0) > tol.tr ||
      !majorizes(std::span<const double>(spectrum.values()), target, tol)) {
    throw NotMajorized("target diagonal is not majorized by the spectrum");
  }

  std::vector<int> target_order(n);
  std::iota(target_order.begin(), target_order.end(), 0);
  std::stable_sort(target_order.begin(), target_order.end(),
                   [&](int a, int b) { return target[a] > target[b]; });

  std::vector<double> val = spectrum.values();
  std::vector<int> active(n);
  std::iota(active.begin(), active.end(), 0);
  std::vector<int> fixed_at(n);
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));

  for (std::size_t t = 0; t + 1 < n; ++t) {
    const double x = target[target_order[t]];
    // adjacent active pair bracketing x; active values stay descending
    std::size_t j = 0;
    while (j + 2 < active.size() && val[active[j + 1]] > x) ++j;
    const int p = active[j];
    const int q = active[j + 1];
    const double gap = val[p] - val[q];
    double c2 = gap > 0.0 ? (x - val[q]) / gap : 1.0;
    // an endpoint hit up to rounding must not leave a ~1e-8 rotation behind
    if (x >= val[p] - kSnap) c2 = 1.0;
    else if (x <= val[q] + kSnap) c2 = 0.0;
    c2 = std::clamp(c2, 0.0, 1.0);
    const double c = std::sqrt(c2);
    const double s = std::sqrt(1.0 - c2);
    // rows p, q of u <- G * u with G = [[c, s], [-s, c]] in the (p, q) plane
    const Eigen::RowVectorXd row_p = u.row(p);
    const Eigen::RowVectorXd row_q = u.row(q);
    u.row(p) = c * row_p + s * row_q;
    u.row(q) = -s * row_p + c * row_q;
    val[q] = val[p] + val[q] - x;
    val[p] = x;
    fixed_at[t] = p;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(j));
  }
  fixed_at[n - 1] = active.front();

  std::vector<int> perm(n);
  for (std::size_t t = 0; t < n; ++t) perm[fixed_at[t]] = target_order[t];
  Eigen::MatrixXd out(u.rows(), u.cols());
  for (std::size_t i = 0; i < n; ++i) out.row(perm[i]) = u.row(static_cast<Eigen::Index>(i));
  return out.cast<Complex>();
}

// ---------------------------------------------------------------------------

int masking_power(const Spectrum& s, const Tolerances& tol) {
  return static_cast<int>(std::floor((1.0 / s.max()) * (1.0 + tol.floor)));
}

int masking_power(const DensityMatrix& sigma, const Tolerances& tol) {
  return masking_power(sigma.spectrum(tol), tol);
}

double pst_power(const BipartitePureState& pad, const Tolerances& tol) {
  return std::log2(static_cast<double>(masking_power(pad.marginal_spectrum(tol), tol)));
}

}  // namespace minent
