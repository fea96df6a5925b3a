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

#include <stdexcept>
#include <string>

namespace minent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, invalid state, bad parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Raised when a requested construction is forbidden by the min-entropy or
/// majorization criteria. These are clean negative answers, not bugs.
class Infeasible : public Error {
 public:
  using Error::Error;
};

class InfeasibleSpectrum : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

class InfeasiblePad : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

class InfeasibleSOR : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

class NotMajorized : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

class InsufficientCatalyst : public Infeasible {
 public:
  InsufficientCatalyst(const std::string& what, double required_bits)
      : Infeasible(what), required_bits_(required_bits) {}
  double required_bits() const { return required_bits_; }

 private:
  double required_bits_;
};

/// No orthogonal Latin square pair of this order is constructible here.
class UnsupportedOrder : public Error {
 public:
  UnsupportedOrder(const std::string& what, int suggested_order, double overhead_bits)
      : Error(what), suggested_order_(suggested_order), overhead_bits_(overhead_bits) {}
  /// Smallest supported order above the requested one.
  int suggested_order() const { return suggested_order_; }
  /// log2(suggested) - log2(requested).
  double overhead_bits() const { return overhead_bits_; }

 private:
  int suggested_order_;
  double overhead_bits_;
};

/// Simulation size guard (desk-scale caps).
class LimitExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace minent
