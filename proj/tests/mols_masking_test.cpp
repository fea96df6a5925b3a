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


#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "minent/entropy.hpp"
#include "minent/errors.hpp"
#include "minent/masking.hpp"
#include "oracles.hpp"

namespace minent {
namespace {

const std::vector<int> kOrders{3, 4, 5, 7, 8, 9};

// independent Latin / orthogonality check
bool latin_and_orthogonal(const MolsPair& p) {
  const int d = p.order();
  std::set<std::pair<int, int>> cells;
  for (int s = 0; s < d; ++s) {
    std::set<int> gr, gc, hr, hc;
    for (int m = 0; m < d; ++m) {
      gr.insert(p.g(s, m));
      gc.insert(p.g(m, s));
      hr.insert(p.h(s, m));
      hc.insert(p.h(m, s));
      cells.insert({p.g(s, m), p.h(s, m)});
    }
    for (const auto* line : {&gr, &gc, &hr, &hc}) {
      if (static_cast<int>(line->size()) != d || *line->begin() != 0 || *line->rbegin() != d - 1) return false;
    }
  }
  return static_cast<int>(cells.size()) == d * d;
}

bool is_permutation_matrix(const Matrix& m) {
  for (long i = 0; i < m.rows(); ++i) {
    int row_ones = 0;
    int col_ones = 0;
    for (long j = 0; j < m.cols(); ++j) {
      for (const Complex x : {m(i, j), m(j, i)}) {
        if (x != Complex(0.0) && x != Complex(1.0)) return false;
      }
      row_ones += m(i, j) == Complex(1.0);
      col_ones += m(j, i) == Complex(1.0);
    }
    if (row_ones != 1 || col_ones != 1) return false;
  }
  return true;
}

TEST(BinaryField, SmallestIrreducibleModuli) {
  EXPECT_EQ(BinaryField(2).modulus(), 0b111u);
  EXPECT_EQ(BinaryField(3).modulus(), 0b1011u);
  EXPECT_EQ(BinaryField(4).modulus(), 0b10011u);
}

TEST(BinaryField, AxiomsHoldExhaustively) {
  for (int k = 2; k <= 4; ++k) {
    const BinaryField f(k);
    const int q = f.order();
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f.mul(a, 1), a);
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          EXPECT_EQ(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
        }
      }
    }
    // the primitive element generates every nonzero element
    std::set<int> powers;
    int x = 1;
    for (int e = 0; e < q - 1; ++e) {
      powers.insert(x);
      x = f.mul(x, f.primitive());
    }
    EXPECT_EQ(static_cast<int>(powers.size()), q - 1);
  }
}

TEST(Mols, OrderThreeMatchesCyclicFormula) {
  const MolsPair p = build_mols(3);
  for (int s = 0; s < 3; ++s) {
    for (int m = 0; m < 3; ++m) {
      EXPECT_EQ(p.g(s, m), (s + m) % 3);
      EXPECT_EQ(p.h(s, m), (2 * s + m) % 3);
    }
  }
  EXPECT_TRUE(latin_and_orthogonal(p));
}

TEST(Mols, SupportedOrdersAreValid) {
  for (int d = 3; d <= 28; ++d) {
    if (d % 4 == 2) continue;
    const MolsPair p = build_mols(d);
    EXPECT_TRUE(latin_and_orthogonal(p)) << "d=" << d;
    EXPECT_TRUE(p.valid());
  }
}

TEST(Mols, UnsupportedOrdersOfferEmbedding) {
  for (int d : {1, 2, 6, 10, 14}) {
    try {
      build_mols(d);
      FAIL() << "d=" << d;
    } catch (const UnsupportedOrder& e) {
      EXPECT_GT(e.suggested_order(), d);
      EXPECT_TRUE(is_supported_order(e.suggested_order()));
      EXPECT_NEAR(e.overhead_bits(), std::log2(static_cast<double>(e.suggested_order()) / d), 1e-12);
    }
  }
  EXPECT_EQ(smallest_supported_order_above(2), 3);
  EXPECT_EQ(smallest_supported_order_above(6), 7);
}

TEST(Mols, JsonRoundTrip) {
  const MolsPair p = build_mols(4);
  const MolsPair q = MolsPair::from_json(Json::parse(p.to_json().dump()));
  EXPECT_EQ(p.g_table(), q.g_table());
  EXPECT_EQ(p.h_table(), q.h_table());
  Json j = p.to_json();
  j["h"] = j["g"];  // g = h is never orthogonal
  EXPECT_THROW(MolsPair::from_json(j), InvalidInput);
}

TEST(Masker, QutritBasisStateHasUniformMarginals) {
  const auto scheme = build_masking_scheme(3);
  const auto out = mask_state(scheme, DensityMatrix::basis_state(3, 0));
  const Matrix uniform = Matrix::Identity(3, 3) / 3.0;
  EXPECT_LE(max_abs_diff(partial_trace(out, {0}).matrix(), uniform), 1e-15);
  EXPECT_LE(max_abs_diff(partial_trace(out, {1}).matrix(), uniform), 1e-15);
  const auto mixed = mask_state(scheme, DensityMatrix::maximally_mixed(3));
  EXPECT_LE(max_abs_diff(mixed.matrix(), Matrix::Identity(9, 9) / 9.0), 1e-15);
  EXPECT_THROW(mask_state(scheme, DensityMatrix::maximally_mixed(2)), DimensionMismatch);
}

TEST(Masker, HaarSecretsAreIndistinguishableFromEitherShare) {
  const auto scheme = build_masking_scheme(3);
  std::vector<DensityMatrix> a;
  std::vector<DensityMatrix> b;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto out = mask_state(scheme, random_state(RandomKind::haar_pure, {3}, s));
    a.push_back(partial_trace(out, {0}));
    b.push_back(partial_trace(out, {1}));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      EXPECT_LE(trace_distance(a[i], a[j]), 1e-10);
      EXPECT_LE(trace_distance(b[i], b[j]), 1e-10);
    }
  }
}

TEST(MaskerProperty, TomographicallyCompleteSecurityAndDecoding) {
  for (int d : kOrders) {
    const auto scheme = build_masking_scheme(d);
    EXPECT_TRUE(is_permutation_matrix(scheme.v));
    EXPECT_TRUE(is_permutation_matrix(scheme.decoder));
    EXPECT_NEAR(min_entropy(scheme.safe_state), std::log2(static_cast<double>(d)), 1e-12);
    EXPECT_EQ(masking_power(scheme.safe_state), d);
    const Matrix uniform = Matrix::Identity(d, d) / static_cast<double>(d);
    for (const auto& psi : tomographic_states(d)) {
      const auto out = mask_state(scheme, psi);
      EXPECT_LE(max_abs_diff(partial_trace(out, {0}).matrix(), uniform), 1e-10) << "d=" << d;
      EXPECT_LE(max_abs_diff(partial_trace(out, {1}).matrix(), uniform), 1e-10) << "d=" << d;
      const Matrix back = scheme.decoder * out.matrix() * scheme.decoder.adjoint();
      EXPECT_LE(max_abs_diff(back, kron(psi.matrix(), uniform)), 1e-12);
    }
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto psi = random_state(RandomKind::haar_pure, {d}, 1000 + s);
      const auto rec = partial_trace(decode_canonical(scheme, psi), {0});
      EXPECT_GE(fidelity(rec, psi), 1.0 - 1e-10) << "d=" << d;
    }
  }
}

TEST(MaskerProperty, VActsAsTheLatinSquarePermutation) {
  for (int d : kOrders) {
    const auto scheme = build_masking_scheme(d);
    for (int s = 0; s < d; ++s) {
      for (int m = 0; m < d; ++m) {
        const int row = scheme.mols.g(s, m) * d + scheme.mols.h(s, m);
        EXPECT_EQ(scheme.v(row, s * d + m), Complex(1.0));
      }
    }
  }
}

TEST(SecretEncoder, CompleteAndConstantOnUniformInput) {
  const auto scheme = build_masking_scheme(3);
  const DensityMatrix uniform = DensityMatrix::maximally_mixed(3);
  const auto reference = secret_encoder(scheme, random_state(RandomKind::haar_pure, {3}, 0)).apply(uniform);
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto psi = random_state(RandomKind::haar_pure, {3}, s);
    const auto ch = secret_encoder(scheme, psi);
    EXPECT_LE(ch.completeness_defect(), 1e-12);
    EXPECT_LE(trace_distance(ch.apply(uniform), reference), 1e-10);
    const auto again = secret_encoder(scheme, psi);
    ASSERT_EQ(again.kraus.size(), ch.kraus.size());
    for (std::size_t k = 0; k < ch.kraus.size(); ++k) EXPECT_TRUE(again.kraus[k] == ch.kraus[k]);
  }
  const auto mixed = secret_encoder(scheme, random_state(RandomKind::ginibre_mixed, {3}, 5));
  EXPECT_LE(mixed.completeness_defect(), 1e-12);
}

TEST(PstDecoder, PermutationAndEndToEnd) {
  const auto scheme = build_masking_scheme(3);
  const auto dec = pst_decoder(scheme);
  EXPECT_TRUE(is_permutation_matrix(dec.w));
  EXPECT_TRUE((dec.w * dec.w.adjoint()).isIdentity(0.0));
  const auto psi = random_state(RandomKind::haar_pure, {3}, 7);
  EXPECT_GE(fidelity(partial_trace(decode_canonical(scheme, psi), {0}), psi), 1.0 - 1e-10);
  const auto out = decode_canonical(scheme, DensityMatrix::maximally_mixed(3));
  EXPECT_LE(max_abs_diff(out.matrix(), Matrix::Identity(9, 9) / 9.0), 1e-15);
}

TEST(Diagnostics, MutualInformationBalance) {
  for (int d : {3, 5}) {
    const auto diag = masking_diagnostics(build_masking_scheme(d));
    EXPECT_LE(diag.i_ra, 1e-8);
    EXPECT_LE(diag.i_rb, 1e-8);
    EXPECT_NEAR(diag.i_rab, 2.0 * std::log2(static_cast<double>(d)), 1e-8);
    EXPECT_LE(diag.i_flag_a, 1e-8);
    EXPECT_LE(diag.i_flag_b, 1e-8);
    EXPECT_TRUE(diag.report.pass());
  }
}

TEST(DoubleDephasing, MasksTwoQubitInputs) {
  const auto sigma = DensityMatrix::maximally_mixed(2);
  Vector plus = Vector::Constant(4, 0.5);  // |+>|+>
  const auto r = mask_via_double_dephasing(sigma, 2, DensityMatrix::pure(plus));
  EXPECT_LE(r.system_deviation, 1e-10);
  const auto mixed = mask_via_double_dephasing(sigma, 2, DensityMatrix::maximally_mixed(4));
  EXPECT_LE(mixed.system_deviation, 1e-10);
  EXPECT_LE(trace_distance(r.sources, mixed.sources), 1e-10);
  EXPECT_THROW(mask_via_double_dephasing(DensityMatrix::diagonal(std::vector<double>{0.6, 0.4}), 2, mixed.system),
               InfeasibleSOR);
}

TEST(DoubleDephasing, NonUniformSourceAlsoMasks) {
  const auto sigma = DensityMatrix::diagonal(std::vector<double>{0.5, 0.25, 0.25});
  const auto ref = mask_via_double_dephasing(sigma, 2, DensityMatrix::basis_state(4, 0));
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto r = mask_via_double_dephasing(sigma, 2, random_state(RandomKind::haar_pure, {4}, s));
    EXPECT_LE(r.system_deviation, 1e-10);
    EXPECT_LE(trace_distance(r.sources, ref.sources), 1e-10);
  }
}

}  // namespace
}  // namespace minent
