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

#pragma once

#include <cstdint>
#include <vector>

#include "minent/serialize.hpp"

namespace minent {

/// GF(2^k) with the numerically smallest irreducible modulus of degree k.
/// Elements are bit vectors of polynomial coefficients; addition is XOR.
class BinaryField {
 public:
  explicit BinaryField(int degree);

  int degree() const { return degree_; }
  int order() const { return 1 << degree_; }
  std::uint32_t modulus() const { return modulus_; }
  /// Smallest element generating the multiplicative group.
  int primitive() const { return primitive_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * order() + b)]; }

 private:
  int degree_;
  std::uint32_t modulus_;
  int primitive_ = 1;
  std::vector<int> mul_;
};

/// Pair of d x d Latin squares (g, h) whose superposition (s, m) -> (g, h) is
/// a bijection on [d] x [d].
class MolsPair {
 public:
  MolsPair(int d, std::vector<int> g, std::vector<int> h);

  int order() const { return d_; }
  int g(int s, int m) const { return g_[static_cast<std::size_t>(s * d_ + m)]; }
  int h(int s, int m) const { return h_[static_cast<std::size_t>(s * d_ + m)]; }
  const std::vector<int>& g_table() const { return g_; }
  const std::vector<int>& h_table() const { return h_; }

  bool g_is_latin() const;
  bool h_is_latin() const;
  bool orthogonal() const;
  bool valid() const { return g_is_latin() && h_is_latin() && orthogonal(); }

  Json to_json() const;
  static MolsPair from_json(const Json& j);

 private:
  int d_;
  std::vector<int> g_;
  std::vector<int> h_;
};

/// d >= 3 and d not congruent to 2 mod 4.
bool is_supported_order(int d);
int smallest_supported_order_above(int d);

/// Odd d: cyclic tables; d = 2^k (k >= 2): GF(2^k) tables; otherwise the
/// MacNeish product of the two. Throws UnsupportedOrder for d in {1, 2} and
/// d = 2 (mod 4).
MolsPair build_mols(int d);

}  // namespace minent
