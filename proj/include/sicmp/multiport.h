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

#ifndef SICMP_MULTIPORT_H
#define SICMP_MULTIPORT_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "sicmp/json_io.h"
#include "sicmp/qstate.h"

namespace sicmp {

enum class ElementKind { kBeamSplitter, kPhaseShifter, kModeSwap };

/// One linear-optical element. Modes are 0-based in memory, 1-based in files.
///
/// A beam splitter with reflectivity eps acts on (mode_a, mode_b) as
///   [ sqrt(eps)    sqrt(1-eps) ]
///   [ sqrt(1-eps)  -sqrt(eps)  ]
/// A phase shifter multiplies the amplitude in mode_a by e^{i phase}.
struct OpticalElement {
  ElementKind kind = ElementKind::kPhaseShifter;
  int mode_a = 0;
  int mode_b = -1;
  double reflectivity = 0.0;
  double phase = 0.0;

  static OpticalElement beam_splitter(int a, int b, double eps);
  static OpticalElement phase_shifter(int mode, double phase);
  static OpticalElement mode_swap(int a, int b);

  bool touches(int mode) const { return mode == mode_a || mode == mode_b; }
  /// 2x2 for two-mode elements, 1x1 for phase shifters.
  Matrix local_matrix() const;
  OpticalElement inverse() const;
};

/// Elements apply first-to-last to the input amplitude vector.
struct OpticalNetlist {
  int num_modes = 0;
  std::vector<OpticalElement> elements;
  std::string label;

  void append(const OpticalElement& e) { elements.push_back(e); }
  void append(std::span<const OpticalElement> es) { elements.insert(elements.end(), es.begin(), es.end()); }
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

/// Structural problems (bad modes, eps outside [0,1], non-finite values).
/// Empty when the netlist is valid.
std::vector<std::string> check_netlist(const OpticalNetlist& net);

/// Product of element matrices in application order. Throws
/// std::invalid_argument if `check_netlist` reports a problem.
UnitaryMatrix recompose(const OpticalNetlist& net);

struct ElementTally {
  int beam_splitters = 0;
  int phase_shifters = 0;
  int swaps = 0;
};

ElementTally tally(const OpticalNetlist& net);

/// Cost model: beam splitters and phase shifters count 1, mode swaps 0.
int element_count(const OpticalNetlist& net);

/// Peephole pass: beam splitters with eps = 0 become swaps, eps = 1 becomes a
/// pi shifter on the second mode, phase shifters on the same mode merge when
/// only swaps separate them, and zero phases are dropped. Preserves recompose.
OpticalNetlist simplify(OpticalNetlist net);

/// The inverse circuit: reversed order, each element inverted.
OpticalNetlist adjoint(const OpticalNetlist& net);

/// Copies `sub` onto the modes `modes[0..sub.num_modes)` of `target`.
void embed(OpticalNetlist& target, const OpticalNetlist& sub, std::span<const int> modes);

/// Swaps realizing a permutation matrix (one unit entry per row and column).
std::vector<OpticalElement> permutation_to_swaps(const Matrix& perm);

/// Triangular nulling decomposition of U (up to global phase) into at most
/// N^2 - 1 beam splitters and phase shifters. Entries are nulled column by
/// column of U^dag, bottom-up within a column. Throws if U is not unitary
/// within 1e-10.
OpticalNetlist reck_decompose(const UnitaryMatrix& u);

/// Rotation [[cos a, -sin a], [sin a, cos a]] on (mode_a, mode_b) as one beam
/// splitter with eps = cos^2 a plus one pi phase shifter. Which mode carries
/// the shifter, and whether it comes first, depends on the quadrant of a.
std::vector<OpticalElement> rotation_to_elements(double alpha, int mode_a, int mode_b);

struct EulerAngles {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

Eigen::Matrix3d rotation_r1(double x);  // about the first axis
Eigen::Matrix3d rotation_r2(double y);  // about the second axis, -sin y at (1,3)
Eigen::Matrix3d rotation_r3(double z);  // about the third axis
Eigen::Matrix3d euler_rotation(const EulerAngles& a);

/// Angles with R = R1(x) R2(y) R3(z). The two solution branches differ in the
/// sign of cos y; `negative_cos_y` selects the branch with cos y < 0.
EulerAngles euler_decompose(const Eigen::Matrix3d& r, bool negative_cos_y = false);

/// U1..U7 with U = U1 U2 U3 U4 U5 U6 U7 for the qubit Naimark unitary.
std::array<Matrix, 7> qubit_factors();

/// Seven-element circuit for U^dag on 4 modes.
OpticalNetlist qubit_sic_netlist();

/// Orthogonal matrix R with Q_k^dag = G_k R D_k.
Eigen::Matrix3d qutrit_rotation();
/// D_1, D_2, D_3: diag(-i, 1, 1), diag(-i, 1, w), diag(-i, 1, w^2).
std::array<Matrix, 3> qutrit_phase_diagonals();
/// Row permutations G_k that satisfy Q_k^dag = G_k R D_k.
std::array<Matrix, 3> qutrit_row_permutations();

/// Circuit for Q_k^dag (k = 1, 2, 3) on 3 modes.
OpticalNetlist q_dagger_netlist(int k);

/// Circuit for the Fourier matrix P: an equal beam splitter and routing
/// followed by the Q_1^dag circuit.
OpticalNetlist fourier_netlist();

/// Circuit for V^dag on 9 modes: S, then Q^dag blocks, then S^dag.
OpticalNetlist qutrit_sic_netlist();

struct RecompositionReport {
  double distance = 0.0;  // Frobenius, phase-optimized when requested
  bool ok = false;
};

RecompositionReport verify_netlist(const OpticalNetlist& net, const Matrix& target, double tol,
                                   bool up_to_global_phase = true);

Json netlist_to_json(const OpticalNetlist& net);
/// Parses structure only; value ranges are checked by `check_netlist`.
OpticalNetlist netlist_from_json(const Json& j);

}  // namespace sicmp

#endif  // SICMP_MULTIPORT_H
