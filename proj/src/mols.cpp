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

#include "minent/mols.hpp"

#include <cmath>
#include <sstream>

#include "minent/errors.hpp"

namespace minent {

namespace {

int poly_degree(std::uint32_t p) {
  int deg = -1;
  while (p) {
    p >>= 1;
    ++deg;
  }
  return deg;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

bool irreducible(std::uint32_t p) {
  const int deg = poly_degree(p);
  for (std::uint32_t q = 2; poly_degree(q) <= deg / 2; ++q) {
    if (poly_mod(p, q) == 0) return false;
  }
  return true;
}

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  std::uint32_t acc = 0;
  for (int bit = 0; b >> bit; ++bit) {
    if ((b >> bit) & 1u) acc ^= a << bit;
  }
  return poly_mod(acc, m);
}

}  // namespace

BinaryField::BinaryField(int degree) : degree_(degree), modulus_(0) {
  if (degree < 1 || degree > 12) throw InvalidInput("BinaryField degree must be in [1, 12]");
  for (std::uint32_t p = 1u << degree; p < (2u << degree); ++p) {
    if (irreducible(p)) {
      modulus_ = p;
      break;
    }
  }
  const int n = order();
  mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      mul_[static_cast<std::size_t>(a * n + b)] =
          static_cast<int>(clmul_mod(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), modulus_));
    }
  }
  for (int cand = 2; cand < n; ++cand) {
    int x = cand;
    int ord = 1;
    while (x != 1) {
      x = mul(x, cand);
      ++ord;
    }
    if (ord == n - 1) {
      primitive_ = cand;
      break;
    }
  }
}

// ---------------------------------------------------------------------------

MolsPair::MolsPair(int d, std::vector<int> g, std::vector<int> h)
    : d_(d), g_(std::move(g)), h_(std::move(h)) {
  const auto cells = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  if (d <= 0 || g_.size() != cells || h_.size() != cells) {
    throw InvalidInput("MOLS tables must be d x d");
  }
  for (std::size_t i = 0; i < cells; ++i) {
    if (g_[i] < 0 || g_[i] >= d || h_[i] < 0 || h_[i] >= d) {
      throw InvalidInput("MOLS entries must lie in [0, d)");
    }
  }
}

namespace {

bool latin(const std::vector<int>& t, int d) {
  for (int i = 0; i < d; ++i) {
    std::vector<bool> row(static_cast<std::size_t>(d), false);
    std::vector<bool> col(static_cast<std::size_t>(d), false);
    for (int j = 0; j < d; ++j) {
      const int r = t[static_cast<std::size_t>(i * d + j)];
      const int c = t[static_cast<std::size_t>(j * d + i)];
      if (row[r] || col[c]) return false;
      row[r] = true;
      col[c] = true;
    }
  }
  return true;
}

}  // namespace

bool MolsPair::g_is_latin() const { return latin(g_, d_); }
bool MolsPair::h_is_latin() const { return latin(h_, d_); }

bool MolsPair::orthogonal() const {
  std::vector<bool> seen(static_cast<std::size_t>(d_) * d_, false);
  for (int s = 0; s < d_; ++s) {
    for (int m = 0; m < d_; ++m) {
      const auto cell = static_cast<std::size_t>(g(s, m) * d_ + h(s, m));
      if (seen[cell]) return false;
      seen[cell] = true;
    }
  }
  return true;
}

Json MolsPair::to_json() const {
  Json g = Json::array();
  Json h = Json::array();
  for (int s = 0; s < d_; ++s) {
    Json gr = Json::array();
    Json hr = Json::array();
    for (int m = 0; m < d_; ++m) {
      gr.push_back(this->g(s, m));
      hr.push_back(this->h(s, m));
    }
    g.push_back(std::move(gr));
    h.push_back(std::move(hr));
  }
  return Json{{"d", d_}, {"g", std::move(g)}, {"h", std::move(h)}};
}

MolsPair MolsPair::from_json(const Json& j) {
  try {
    const int d = j.at("d").get<int>();
    std::vector<int> g;
    std::vector<int> h;
    for (const auto& row : j.at("g")) {
      for (const auto& x : row) g.push_back(x.get<int>());
    }
    for (const auto& row : j.at("h")) {
      for (const auto& x : row) h.push_back(x.get<int>());
    }
    MolsPair pair(d, std::move(g), std::move(h));
    if (!pair.valid()) throw InvalidInput("MOLS tables are not an orthogonal Latin square pair");
    return pair;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed MOLS JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

bool is_supported_order(int d) { return d >= 3 && d % 4 != 2; }

int smallest_supported_order_above(int d) {
  int c = std::max(d + 1, 3);
  while (!is_supported_order(c)) ++c;
  return c;
}

namespace {

MolsPair cyclic_mols(int d) {
  std::vector<int> g(static_cast<std::size_t>(d) * d);
  std::vector<int> h(g.size());
  for (int s = 0; s < d; ++s) {
    for (int m = 0; m < d; ++m) {
      g[static_cast<std::size_t>(s * d + m)] = (m + s) % d;
      h[static_cast<std::size_t>(s * d + m)] = (m + 2 * s) % d;
    }
  }
  return MolsPair(d, std::move(g), std::move(h));
}

MolsPair field_mols(int degree) {
  const BinaryField f(degree);
  const int d = f.order();
  const int alpha = f.primitive();
  std::vector<int> g(static_cast<std::size_t>(d) * d);
  std::vector<int> h(g.size());
  for (int s = 0; s < d; ++s) {
    for (int m = 0; m < d; ++m) {
      g[static_cast<std::size_t>(s * d + m)] = m ^ s;
      h[static_cast<std::size_t>(s * d + m)] = m ^ f.mul(alpha, s);
    }
  }
  return MolsPair(d, std::move(g), std::move(h));
}

// (s1, s2) -> s1 * d2 + s2, likewise for m and the table values
MolsPair macneish(const MolsPair& a, const MolsPair& b) {
  const int d1 = a.order();
  const int d2 = b.order();
  const int d = d1 * d2;
  std::vector<int> g(static_cast<std::size_t>(d) * d);
  std::vector<int> h(g.size());
  for (int s = 0; s < d; ++s) {
    for (int m = 0; m < d; ++m) {
      const int s1 = s / d2, s2 = s % d2, m1 = m / d2, m2 = m % d2;
      g[static_cast<std::size_t>(s * d + m)] = a.g(s1, m1) * d2 + b.g(s2, m2);
      h[static_cast<std::size_t>(s * d + m)] = a.h(s1, m1) * d2 + b.h(s2, m2);
    }
  }
  return MolsPair(d, std::move(g), std::move(h));
}

}  // namespace

MolsPair build_mols(int d) {
  if (!is_supported_order(d)) {
    const int next = smallest_supported_order_above(d);
    const double overhead = d >= 1 ? std::log2(static_cast<double>(next)) - std::log2(static_cast<double>(d)) : 0.0;
    std::ostringstream msg;
    msg.precision(4);
    if (d == 2 || d == 6) {
      msg << "no pair of orthogonal Latin squares of order " << d << " exists";
    } else if (d == 1) {
      msg << "order 1 carries no quantum information";
    } else if (d <= 0) {
      msg << "order must be positive, got " << d;
    } else {
      msg << "order " << d << " = 2 (mod 4) is outside the odd/GF(2^k)/MacNeish construction";
    }
    msg << "; smallest supported order is " << next << " (embedding costs " << overhead
        << " extra bits of min-entropy)";
    throw UnsupportedOrder(msg.str(), next, overhead);
  }
  int twos = 0;
  int odd = d;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  if (twos == 0) return cyclic_mols(d);
  if (odd == 1) return field_mols(twos);
  return macneish(field_mols(twos), cyclic_mols(odd));
}

}  // namespace minent
