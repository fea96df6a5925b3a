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

#include <json.hpp>

#include "minent/qstate.hpp"

namespace minent {

using Json = nlohmann::json;

// Matrix format: {"dims":[...], "re":[[...]], "im":[[...]]}, row-major.
// Vector format: {"dims":[...], "amp_re":[...], "amp_im":[...]}.
// Doubles are written in shortest round-trip form, so parse(dump(x)) == x.

Json matrix_to_json(const Matrix& m, const std::vector<int>& dims);
Json matrix_to_json(const Matrix& m);
/// Returns the raw matrix; `dims` receives the stored factor list (or the
/// side length when absent).
Matrix matrix_from_json(const Json& j, std::vector<int>* dims = nullptr);

Json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j, const Tolerances& tol = {});

Json vector_to_json(const Vector& v, const std::vector<int>& dims);
Vector vector_from_json(const Json& j, std::vector<int>* dims = nullptr);

Json to_json(const BipartitePureState& pad);
BipartitePureState pad_from_json(const Json& j, const Tolerances& tol = {});

Json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j, const Tolerances& tol = {});

/// Reads and parses a JSON file; throws InvalidInput with the path on error.
Json read_json_file(const std::string& path);

/// Writes `content` to `path` through a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace minent
