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

#include "minent/tolerances.hpp"

#include <cstdlib>
#include <sstream>

#include "minent/errors.hpp"

namespace minent {

namespace {

double parse_positive(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !(v > 0.0)) {
    throw InvalidInput("tolerance must be a positive number, got '" + text + "'");
  }
  return v;
}

}  // namespace

Tolerances Tolerances::parse(const std::string& text, Tolerances base) {
  if (text.empty()) return base;
  if (text.find('=') == std::string::npos) {
    const double v = parse_positive(text);
    base.herm = base.psd = base.tr = base.eq = base.major = v;
    return base;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("tolerance entry '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    const double v = parse_positive(item.substr(eq + 1));
    if (key == "herm") base.herm = v;
    else if (key == "psd") base.psd = v;
    else if (key == "tr") base.tr = v;
    else if (key == "eq") base.eq = v;
    else if (key == "major") base.major = v;
    else if (key == "floor") base.floor = v;
    else throw InvalidInput("unknown tolerance key '" + key + "'");
  }
  return base;
}

}  // namespace minent
