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

namespace minent {

/// Absolute numerical tolerances shared by every module.
struct Tolerances {
  double herm = 1e-9;   // max |A - A^dagger| entry
  double psd = 1e-9;    // most negative eigenvalue still treated as rounding
  double tr = 1e-9;     // |Tr rho - 1|
  double eq = 1e-10;    // matrix-equality assertions
  double major = 1e-9;  // per partial sum in majorization tests
  double floor = 1e-6;  // relative guard inside the power floors

  /// Scale-aware rank cutoff: an eigenvalue below this counts as zero.
  static double zero_threshold(long dim) { return 1e-12 * static_cast<double>(dim); }

  /// Parses "key=value[,key=value...]" or a bare number (applied to every
  /// absolute tolerance). Throws InvalidInput on unknown keys or values <= 0.
  static Tolerances parse(const std::string& text, Tolerances base);
  static Tolerances parse(const std::string& text) { return parse(text, Tolerances{}); }
};

}  // namespace minent
