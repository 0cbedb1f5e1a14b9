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

#include "sicmp/sic.h"

#include <cmath>
#include <stdexcept>

namespace sicmp {
namespace {

Matrix matrix_power(const Matrix& m, int k) {
  Matrix r = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

SicPovm SicPovm::from_vectors(std::vector<PureState> vectors) {
  if (vectors.empty()) throw std::invalid_argument("SicPovm: no vectors");
  const int d = vectors.front().dim();
  if (static_cast<int>(vectors.size()) != d * d) {
    throw std::invalid_argument("SicPovm: expected d^2 vectors");
  }
  SicPovm povm;
  povm.dim = d;
  for (const auto& v : vectors) {
    if (v.dim() != d) throw std::invalid_argument("SicPovm: vectors of mixed dimension");
    povm.effects.push_back(v.projector() / static_cast<double>(d));
  }
  povm.vectors = std::move(vectors);
  return povm;
}

SicPovm qubit_sic() {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  std::vector<PureState> v;
  v.push_back(PureState::from_amplitudes(Vector{{1.0, 0.0}}));
  v.push_back(PureState::normalized(Vector{{1.0 / s3, s2 / s3}}));
  v.push_back(PureState::normalized(Vector{{cis(kPi / 3) / s3, cis(-kPi / 3) * s2 / s3}}));
  v.push_back(PureState::normalized(Vector{{cis(-kPi / 3) / s3, cis(kPi / 3) * s2 / s3}}));
  return SicPovm::from_vectors(std::move(v));
}

WeylHeisenbergPair weyl_heisenberg() {
  WeylHeisenbergPair wh;
  wh.omega = omega();
  wh.x = Matrix::Zero(3, 3);
  wh.x(0, 1) = wh.x(1, 2) = wh.x(2, 0) = 1.0;
  wh.z = Matrix::Zero(3, 3);
  wh.z(0, 0) = 1.0;
  wh.z(1, 1) = wh.omega;
  wh.z(2, 2) = cis(4.0 * kPi / 3.0);
  return wh;
}

PureState qutrit_fiducial() {
  return PureState::normalized(Vector{{0.0, 1.0, -1.0}});
}

std::vector<std::pair<int, int>> qutrit_orbit_order() {
  std::vector<std::pair<int, int>> order;
  for (int k = 0; k < 3; ++k) {
    for (int m = 0; m < 3; ++m) order.emplace_back((3 - k) % 3, m);
  }
  return order;
}

SicPovm qutrit_orbit(const PureState& fiducial) {
  if (fiducial.dim() != 3) throw std::invalid_argument("qutrit_orbit: fiducial must be 3-dimensional");
  const WeylHeisenbergPair wh = weyl_heisenberg();
  const auto order = qutrit_orbit_order();
  std::vector<PureState> v;
  for (const auto& [n, m] : order) {
    v.push_back(PureState::normalized(matrix_power(wh.x, n) * matrix_power(wh.z, m) * fiducial.amplitudes()));
  }
  SicPovm povm = SicPovm::from_vectors(std::move(v));
  povm.orbit = order;
  return povm;
}

SicPovm qutrit_sic() { return qutrit_orbit(qutrit_fiducial()); }

SicReport verify_sic(const SicPovm& povm, double tol) {
  SicReport r;
  const int d = povm.dim;
  const int n = static_cast<int>(povm.effects.size());
  const double dd = static_cast<double>(d);
  Matrix sum = Matrix::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    sum += povm.effects[i];
    for (int j = 0; j < n; ++j) {
      const double expected = (dd * (i == j ? 1.0 : 0.0) + 1.0) / (dd * dd * (dd + 1.0));
      const double g = (povm.effects[i] * povm.effects[j]).trace().real();
      r.gram_deviation = std::max(r.gram_deviation, std::abs(g - expected));
    }
  }
  r.identity_deviation = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  r.pass = n == d * d && r.gram_deviation <= tol && r.identity_deviation <= tol;
  return r;
}

Json sic_to_json(const SicPovm& povm) {
  Json vecs = Json::array();
  for (const auto& v : povm.vectors) vecs.push_back(vector_to_json(v.amplitudes()));
  Json j{{"dim", povm.dim}, {"vectors", vecs}};
  if (!povm.orbit.empty()) {
    Json orbit = Json::array();
    for (const auto& [n, m] : povm.orbit) orbit.push_back({n, m});
    j["orbit"] = orbit;
  }
  return j;
}

SicPovm sic_from_json(const Json& j) {
  std::vector<PureState> v;
  for (const auto& item : j.at("vectors")) v.push_back(PureState::normalized(vector_from_json(item)));
  SicPovm povm = SicPovm::from_vectors(std::move(v));
  if (povm.dim != j.at("dim").get<int>()) throw std::invalid_argument("sic JSON: dim mismatch");
  if (j.contains("orbit")) {
    for (const auto& nm : j.at("orbit")) povm.orbit.emplace_back(nm.at(0).get<int>(), nm.at(1).get<int>());
  }
  return povm;
}

}  // namespace sicmp
