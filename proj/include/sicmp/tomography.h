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

#ifndef SICMP_TOMOGRAPHY_H
#define SICMP_TOMOGRAPHY_H

#include <array>
#include <cstdint>
#include <vector>

#include "sicmp/json_io.h"
#include "sicmp/qstate.h"
#include "sicmp/sic.h"

namespace sicmp {

/// rho = sum_i [(d+1) p(i) - 1/d] Pi_i. Hermitian with unit trace for any
/// normalized input; the psd flag records whether the input was physical.
DensityOperator linear_reconstruct(const OutcomeDistribution& p, const SicPovm& povm);

/// Unvalidated form of the same rule for raw frequency vectors.
Matrix linear_reconstruct_matrix(const RealVector& p, const SicPovm& povm);

/// Index triples (0-based, ascending) of the qutrit cubic purity identity.
struct AffineLineSet {
  std::vector<std::array<int, 3>> triples;
};

/// Checks the AG(2,3) incidence structure: 12 lines of 3 points on 9 points,
/// every point on 4 lines, lines falling into 4 parallel classes of 3
/// pairwise-disjoint lines.
bool has_affine_plane_structure(const AffineLineSet& lines);

/// Identifies the cubic identity (1/3) sum p^3 = sum_{(ijk)} p_i p_j p_k by
/// least squares over all 84 triples on `samples` random pure states, then
/// enumerates the null space to confirm the 0/1 solution is unique. Throws
/// std::runtime_error if no unique 12-line 0/1 solution with AG(2,3)
/// structure exists.
AffineLineSet derive_affine_lines(const SicPovm& povm, int samples = 240, std::uint64_t seed = 0x51C);

struct PurityResiduals {
  double quad = 0.0;   // sum p^2 - 1/6
  double cubic = 0.0;  // (1/3) sum p^3 - sum over lines of p_i p_j p_k
};

/// Throws std::invalid_argument unless p has 9 entries.
PurityResiduals purity_residuals(const RealVector& p, const AffineLineSet& lines);

struct PureStateEstimate {
  RealVector p_star;
  DensityOperator rho_star = DensityOperator::maximally_mixed(1);
  Vector psi_star;
  double residual_quad = 0.0;
  double residual_cubic = 0.0;
  double distance = 0.0;       // ||p* - f||_2
  double gradient_norm = 0.0;  // first-order optimality on the manifold
  double eigenvalue_gap = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Levenberg-Marquardt fit of p(psi) to f from a single starting vector.
PureStateEstimate fit_pure_state(const RealVector& f, const SicPovm& povm, const Vector& start, double tol = 1e-9,
                                 int max_iter = 500);

/// Nearest pure-state distribution to f in Euclidean distance, for any SIC.
/// Minimizes ||p(psi) - f|| over psi by Levenberg-Marquardt from each
/// eigenvector of the linear estimate and keeps the best. Residuals are left
/// at zero; see `project_to_pure_manifold` for the qutrit diagnostics.
PureStateEstimate nearest_pure_distribution(const RealVector& f, const SicPovm& povm, double tol = 1e-9,
                                            int max_iter = 500);

/// Qutrit estimate on the manifold {sum p = 1, sum p^2 = 1/6, cubic identity}.
/// Throws std::invalid_argument for f with length != 9, negative entries, or
/// a total off by more than 1e-9.
PureStateEstimate project_to_pure_manifold(const RealVector& f, const AffineLineSet& lines, double tol = 1e-9,
                                           int max_iter = 500);
PureStateEstimate project_to_pure_manifold(const RealVector& f, const AffineLineSet& lines, const SicPovm& povm,
                                           double tol = 1e-9, int max_iter = 500);

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2. Reduces to <psi|b|psi>
/// when either operand is pure. Negative eigenvalues of a non-physical
/// estimate are clipped before the square roots. Result clamped to [0, 1].
double estimate_fidelity(const DensityOperator& rho_est, const DensityOperator& rho_true);

Json lines_to_json(const AffineLineSet& lines);
Json estimate_to_json(const PureStateEstimate& e);

}  // namespace sicmp

#endif  // SICMP_TOMOGRAPHY_H
