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

#include "minent/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minent {

bool VerificationReport::pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass(); });
}

const VerificationReport::Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

double VerificationReport::value(const std::string& name) const {
  if (const auto* c = find(name)) return c->value;
  throw std::out_of_range("no check named '" + name + "'");
}

Json VerificationReport::to_json() const {
  Json arr = Json::array();
  for (const auto& c : checks_) {
    // NaN is not representable in JSON; a NaN deviation is a failure anyway
    const Json value = std::isnan(c.value) ? Json(nullptr) : Json(c.value);
    arr.push_back(Json{{"name", c.name}, {"value", value}, {"tolerance", c.tolerance},
                       {"pass", c.pass()}});
  }
  return Json{{"pass", pass()}, {"checks", std::move(arr)}};
}

}  // namespace minent
