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

#include "minent/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "minent/errors.hpp"

namespace minent {

namespace {

std::vector<int> read_dims(const Json& j, long side) {
  if (!j.contains("dims")) return {static_cast<int>(side)};
  std::vector<int> dims;
  for (const auto& d : j.at("dims")) dims.push_back(d.get<int>());
  return dims;
}

}  // namespace

Json matrix_to_json(const Matrix& m, const std::vector<int>& dims) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return Json{{"dims", dims}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Json matrix_to_json(const Matrix& m) { return matrix_to_json(m, {static_cast<int>(m.rows())}); }

Matrix matrix_from_json(const Json& j, std::vector<int>* dims) {
  try {
    const auto& re = j.at("re");
    const auto rows = static_cast<Eigen::Index>(re.size());
    const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(re.at(0).size());
    Matrix m = Matrix::Zero(rows, cols);
    const bool has_im = j.contains("im");
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (static_cast<Eigen::Index>(re.at(r).size()) != cols) throw InvalidInput("ragged 're' rows");
      for (Eigen::Index c = 0; c < cols; ++c) {
        const double x = re.at(r).at(c).get<double>();
        const double y = has_im ? j.at("im").at(r).at(c).get<double>() : 0.0;
        m(r, c) = Complex(x, y);
      }
    }
    if (dims) *dims = read_dims(j, rows);
    return m;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed matrix JSON: ") + e.what());
  }
}

Json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix(), rho.dims()); }

DensityMatrix density_from_json(const Json& j, const Tolerances& tol) {
  std::vector<int> dims;
  Matrix m = matrix_from_json(j, &dims);
  return DensityMatrix(std::move(m), std::move(dims), tol);
}

Json vector_to_json(const Vector& v, const std::vector<int>& dims) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"dims", dims}, {"amp_re", std::move(re)}, {"amp_im", std::move(im)}};
}

Vector vector_from_json(const Json& j, std::vector<int>* dims) {
  try {
    const auto& re = j.at("amp_re");
    const auto n = static_cast<Eigen::Index>(re.size());
    Vector v(n);
    const bool has_im = j.contains("amp_im");
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = Complex(re.at(i).get<double>(), has_im ? j.at("amp_im").at(i).get<double>() : 0.0);
    }
    if (dims) *dims = read_dims(j, n);
    return v;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed vector JSON: ") + e.what());
  }
}

Json to_json(const BipartitePureState& pad) {
  return vector_to_json(pad.amplitudes(), {pad.dim_a(), pad.dim_b()});
}

BipartitePureState pad_from_json(const Json& j, const Tolerances& tol) {
  std::vector<int> dims;
  const Vector v = vector_from_json(j, &dims);
  if (dims.size() != 2) throw InvalidInput("bipartite vector needs dims [dimA, dimB]");
  return schmidt_decompose(v, dims[0], dims[1], tol);
}

Json to_json(const Spectrum& s) { return Json(s.values()); }

Spectrum spectrum_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_array()) throw InvalidInput("spectrum JSON must be an array of numbers");
  std::vector<double> values;
  for (const auto& x : j) {
    if (!x.is_number()) throw InvalidInput("spectrum JSON must be an array of numbers");
    values.push_back(x.get<double>());
  }
  return Spectrum(std::move(values), tol);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw InvalidInput("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace minent
