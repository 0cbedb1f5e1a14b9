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

#ifndef SICMP_NAIMARK_H
#define SICMP_NAIMARK_H

#include <optional>
#include <vector>

#include "sicmp/json_io.h"
#include "sicmp/qstate.h"
#include "sicmp/sic.h"

namespace sicmp {

/// Naimark dilation of a rank-one POVM. The COLUMNS of `completion` form the
/// projective measurement basis; the rows listed in `embedding` hold the
/// scaled POVM vectors e_i = u_i / sqrt(d). The measurement is realized by
/// applying completion^dag to the embedded input and detecting mode i.
struct NaimarkExtension {
  int system_dim = 0;
  Matrix scaled_vectors;  // system_dim x n
  UnitaryMatrix completion = UnitaryMatrix::identity(1);
  std::vector<int> embedding;  // system basis index -> mode index
  std::optional<SicPovm> povm;

  int num_modes() const { return completion.dim(); }
};

/// Completes m orthonormal rows to an n x n unitary by Gram-Schmidt over the
/// canonical basis in index order (candidates with residual norm < 1e-8 are
/// skipped). Throws if n <= m or the rows are not orthonormal within 1e-10.
NaimarkExtension complete_povm(const Matrix& scaled_vectors);

/// The 4x4 extension whose first two rows are the qubit SIC vectors / sqrt2.
NaimarkExtension qubit_naimark_unitary();

/// The 9x9 block-circulant extension; rows 1, 4, 7 carry the qutrit SIC / sqrt3.
NaimarkExtension qutrit_naimark_unitary();

/// Qubit (a, b) -> (a, b, 0, 0); qutrit (a, b, c) -> (a,0,0,b,0,0,c,0,0).
Vector embed_state(const PureState& phi, int device_dim);
/// Embeds through an extension's own embedding map.
Vector embed_state(const PureState& phi, const NaimarkExtension& ext);

/// Three-dimensional Fourier matrix P with rows (1,1,1), (w^2,w,1), (w,w^2,1), over sqrt3.
Matrix fourier_matrix();

struct BlockCirculantParts {
  Matrix a, b, c;  // first block row of V = circ(A, B, C)
  UnitaryMatrix s = UnitaryMatrix::identity(9);  // P (x) I3
  UnitaryMatrix q1 = UnitaryMatrix::identity(3);
  UnitaryMatrix q2 = UnitaryMatrix::identity(3);
  UnitaryMatrix q3 = UnitaryMatrix::identity(3);
  double off_diagonal_norm = 0.0;  // of S V S^dag outside the diagonal blocks

  /// S^dag diag(Q1, Q2, Q3) S.
  Matrix reassemble() const;
};

/// Throws std::invalid_argument if V is not 9x9 block-circulant within 1e-10.
BlockCirculantParts block_circulant_parts(const UnitaryMatrix& v);

/// max_j | |<phi'|U_j>|^2 - (1/d) |<phi|u_j>|^2 |. The reference uses the
/// extension's SIC vectors when present, otherwise its scaled_vectors.
double verify_probability_scaling(const PureState& phi, const NaimarkExtension& ext);

/// |<phi'|U_j>|^2 for each column j.
RealVector column_probabilities(const PureState& phi, const NaimarkExtension& ext);

Json naimark_to_json(const NaimarkExtension& ext);
NaimarkExtension naimark_from_json(const Json& j);

}  // namespace sicmp

#endif  // SICMP_NAIMARK_H
