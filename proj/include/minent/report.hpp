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

#include <string>
#include <vector>

#include "minent/serialize.hpp"

namespace minent {

/// A list of named deviations, each compared against its own tolerance.
/// A check passes when value <= tolerance.
class VerificationReport {
 public:
  struct Check {
    std::string name;
    double value;
    double tolerance;
    bool pass() const { return value <= tolerance; }
  };

  void add(std::string name, double value, double tolerance) {
    checks_.push_back({std::move(name), value, tolerance});
  }
  const std::vector<Check>& checks() const { return checks_; }
  bool pass() const;
  /// Value of the named check; throws std::out_of_range if absent.
  double value(const std::string& name) const;
  const Check* find(const std::string& name) const;
  Json to_json() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace minent
