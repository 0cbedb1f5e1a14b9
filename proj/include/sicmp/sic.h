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

#ifndef SICMP_SIC_H
#define SICMP_SIC_H

#include <utility>
#include <vector>

#include "sicmp/json_io.h"
#include "sicmp/qstate.h"

namespace sicmp {

/// Symmetric informationally complete POVM with d^2 rank-one effects
/// E_i = |u_i><u_i| / d. Outcome labels are 0-based here and 1-based in files.
struct SicPovm {
  int dim = 0;
  std::vector<PureState> vectors;
  std::vector<Matrix> effects;
  /// Weyl-Heisenberg orbit coordinates (n, m) with u_i = X^n Z^m psi.
  /// Empty for the qubit SIC.
  std::vector<std::pair<int, int>> orbit;

  int num_outcomes() const { return static_cast<int>(vectors.size()); }

  /// Builds effects from unit vectors. Throws if the count is not dim^2.
  static SicPovm from_vectors(std::vector<PureState> vectors);
};

struct WeylHeisenbergPair {
  Matrix x;  // shift: X e_{k} = e_{k-1 mod 3}
  Matrix z;  // phase: Z e_k = omega^k e_k
  Complex omega;
};

/// The tetrahedral qubit SIC (1,0), (1, sqrt2)/sqrt3, (e^{i pi/3}, e^{-i pi/3} sqrt2)/sqrt3,
/// (e^{-i pi/3}, e^{i pi/3} sqrt2)/sqrt3, in that order.
SicPovm qubit_sic();

WeylHeisenbergPair weyl_heisenberg();

/// Fiducial (0, 1, -1)/sqrt2 of the qutrit SIC.
PureState qutrit_fiducial();

/// Orbit coordinates (n, m) for each qutrit outcome label. Label i = 3k + m
/// carries n = (3 - k) mod 3, which makes outcome i the i-th column of the
/// 9x9 Naimark unitary (rows 1, 4, 7 of that column hold u_i / sqrt3).
std::vector<std::pair<int, int>> qutrit_orbit_order();

/// The nine vectors X^n Z^m psi in `qutrit_orbit_order()`.
SicPovm qutrit_sic();

/// Orbit of an arbitrary qutrit fiducial in the same label order.
SicPovm qutrit_orbit(const PureState& fiducial);

struct SicReport {
  double gram_deviation = 0.0;      // max |tr(E_i E_j) - (d delta_ij + 1)/(d^2 (d+1))|
  double identity_deviation = 0.0;  // max entry of |sum E_i - I|
  bool pass = false;
};

/// Report-carrying; never throws on a malformed candidate with consistent shapes.
SicReport verify_sic(const SicPovm& povm, double tol = kNormTol);

/// {"dim": d, "vectors": [...]} with each vector in the matrix format.
Json sic_to_json(const SicPovm& povm);
/// Vectors are normalized on load; verification is left to `verify_sic`.
SicPovm sic_from_json(const Json& j);

}  // namespace sicmp

#endif  // SICMP_SIC_H
