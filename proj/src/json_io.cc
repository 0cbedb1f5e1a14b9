// Copyright 2026 The sicmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sicmp/json_io.h"

#include <fstream>
#include <stdexcept>

namespace sicmp {
namespace {

std::pair<std::vector<double>, std::vector<double>> parts(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("dim")) {
    throw std::invalid_argument("matrix JSON needs \"dim\" and \"re\"");
  }
  auto re = j.at("re").get<std::vector<double>>();
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
  if (im.size() != re.size()) throw std::invalid_argument("matrix JSON: re/im length mismatch");
  return {std::move(re), std::move(im)};
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json j;
  std::vector<double> re, im;
  re.reserve(m.size());
  im.reserve(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  j["dim"] = m.rows();
  if (m.rows() != m.cols()) {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

Json vector_to_json(const Vector& v) {
  std::vector<double> re, im;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    re.push_back(v(k).real());
    im.push_back(v(k).imag());
  }
  return Json{{"dim", v.size()}, {"re", re}, {"im", im}};
}

Json real_vector_to_json(const RealVector& v) {
  return Json(std::vector<double>(v.data(), v.data() + v.size()));
}

Matrix matrix_from_json(const Json& j) {
  auto [re, im] = parts(j);
  const auto dim = j.at("dim").get<Eigen::Index>();
  Eigen::Index rows = dim, cols = dim;
  if (j.contains("rows")) rows = j.at("rows").get<Eigen::Index>();
  if (j.contains("cols")) cols = j.at("cols").get<Eigen::Index>();
  if (rows < 1 || cols < 1 || static_cast<Eigen::Index>(re.size()) != rows * cols) {
    throw std::invalid_argument("matrix JSON: entry count does not match shape");
  }
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = Complex(re[r * cols + c], im[r * cols + c]);
  }
  return m;
}

Vector vector_from_json(const Json& j) {
  auto [re, im] = parts(j);
  const auto dim = j.at("dim").get<std::size_t>();
  if (dim < 1 || re.size() != dim) throw std::invalid_argument("vector JSON: length != dim");
  Vector v(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) v(static_cast<Eigen::Index>(k)) = Complex(re[k], im[k]);
  return v;
}

RealVector real_vector_from_json(const Json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

bool json_is_vector(const Json& j) {
  return j.is_object() && j.contains("re") && j.contains("dim") && !j.contains("rows") &&
         j.at("re").size() == j.at("dim").get<std::size_t>();
}

DensityOperator state_from_json(const Json& j) {
  if (json_is_vector(j)) return DensityOperator::from_pure(PureState::from_amplitudes(vector_from_json(j), 1e-9));
  return DensityOperator::from_matrix(matrix_from_json(j), 1e-9);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace sicmp
