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

#include <vector>

#include "minent/qstate.hpp"

namespace minent {

/// Channel rho -> sum_k A_k rho A_k^dagger between fixed dimensions.
struct KrausChannel {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<Matrix> kraus;  // each out_dim x in_dim

  DensityMatrix apply(const DensityMatrix& rho) const;
  /// Largest entry of |sum_k A_k^dagger A_k - I|.
  double completeness_defect() const;
};

}  // namespace minent
