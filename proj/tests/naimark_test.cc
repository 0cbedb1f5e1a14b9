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

#include "sicmp/naimark.h"

#include <cmath>

#include "gtest/gtest.h"
#include "sicmp/rng.h"
#include "test_util.h"

using namespace sicmp;
using sicmp::testing::haar_unitary;

TEST(naimark, qubit_unitary_first_column) {
  const NaimarkExtension ext = qubit_naimark_unitary();
  Vector expected(4);
  expected << std::sqrt(3.0), 0.0, std::sqrt(3.0), 0.0;
  expected /= std::sqrt(6.0);
  ASSERT_TRUE((ext.completion.matrix().col(0) - expected).isZero(1e-15));
  ASSERT_TRUE(check_unitary(ext.completion.matrix(), 1e-12).ok);
}

TEST(naimark, columns_map_to_detector_modes) {
  for (const NaimarkExtension& ext : {qubit_naimark_unitary(), qutrit_naimark_unitary()}) {
    const Matrix& u = ext.completion.matrix();
    for (int j = 0; j < u.cols(); ++j) {
      ASSERT_TRUE((u.adjoint() * u.col(j) - Vector::Unit(u.rows(), j)).isZero(1e-12));
    }
  }
}

TEST(naimark, qutrit_unitary_entries) {
  const NaimarkExtension ext = qutrit_naimark_unitary();
  const Matrix& v = ext.completion.matrix();
  ASSERT_NEAR(std::abs(v(1, 0) - std::sqrt(2.0) / std::sqrt(6.0)), 0.0, 1e-15);
  ASSERT_TRUE(check_unitary(v, 1e-12).ok);
  Vector rows(3);
  rows << v(0, 0), v(3, 0), v(6, 0);
  ASSERT_NEAR(std::abs(rows.normalized().dot(qutrit_fiducial().amplitudes())), 1.0, 1e-14);
}

TEST(naimark, embedding_rows_carry_scaled_sic_vectors) {
  for (const NaimarkExtension& ext : {qubit_naimark_unitary(), qutrit_naimark_unitary()}) {
    const SicPovm& sic = *ext.povm;
    const double scale = std::sqrt(static_cast<double>(ext.system_dim));
    for (int j = 0; j < sic.num_outcomes(); ++j) {
      Vector col(ext.system_dim);
      for (int k = 0; k < ext.system_dim; ++k) col(k) = ext.completion(ext.embedding[k], j) * scale;
      ASSERT_TRUE((col - sic.vectors[j].amplitudes()).isZero(1e-14)) << "column " << j;
    }
  }
}

TEST(naimark, embed_state_patterns) {
  Vector a(2);
  a << 1.0, 0.0;
  ASSERT_EQ(embed_state(PureState::from_amplitudes(a), 2), Vector::Unit(4, 0));
  ASSERT_EQ(embed_state(PureState::from_amplitudes(Vector::Unit(3, 2)), 3), Vector::Unit(9, 6));
  const PureState r = random_pure_state(3, 8);
  ASSERT_NEAR(embed_state(r, 3).norm(), 1.0, 1e-14);
  ASSERT_THROW(embed_state(r, 2), std::invalid_argument);
}

TEST(naimark, probability_scaling_on_known_inputs) {
  const NaimarkExtension q2 = qubit_naimark_unitary();
  const PureState zero = PureState::from_amplitudes(Vector::Unit(2, 0));
  ASSERT_LT(verify_probability_scaling(zero, q2), 1e-12);
  const RealVector p2 = column_probabilities(zero, q2);
  const double expected2[] = {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  for (int i = 0; i < 4; ++i) ASSERT_NEAR(p2(i), expected2[i], 1e-12);

  const NaimarkExtension q3 = qutrit_naimark_unitary();
  const RealVector p3 = column_probabilities(qutrit_fiducial(), q3);
  ASSERT_LT(verify_probability_scaling(qutrit_fiducial(), q3), 1e-12);
  ASSERT_NEAR(p3(0), 1.0 / 3, 1e-12);
  for (int i = 1; i < 9; ++i) ASSERT_NEAR(p3(i), 1.0 / 12, 1e-12);
}

TEST(naimark, probability_scaling_on_random_states) {
  for (const NaimarkExtension& ext : {qubit_naimark_unitary(), qutrit_naimark_unitary()}) {
    for (int s = 0; s < 100; ++s) {
      ASSERT_LT(verify_probability_scaling(random_pure_state(ext.system_dim, 500 + s), ext), 1e-10);
    }
  }
}

TEST(naimark, complete_povm_qubit) {
  const Matrix rows = qubit_naimark_unitary().completion.matrix().topRows(2);
  const NaimarkExtension ext = complete_povm(rows);
  ASSERT_EQ(ext.num_modes(), 4);
  ASSERT_TRUE(check_unitary(ext.completion.matrix(), 1e-12).ok);
  ASSERT_TRUE((ext.completion.matrix().topRows(2) - rows).isZero(1e-14));
}

TEST(naimark, complete_povm_random_rows) {
  for (int s = 0; s < 20; ++s) {
    const Matrix u = haar_unitary(4, 40 + s);
    const NaimarkExtension ext = complete_povm(u.topRows(2));
    ASSERT_TRUE(check_unitary(ext.completion.matrix(), 1e-12).ok);
    ASSERT_TRUE((ext.completion.matrix().topRows(2) - u.topRows(2)).isZero(1e-13));
  }
}

TEST(naimark, complete_povm_rejects_bad_input) {
  ASSERT_THROW(complete_povm(Matrix::Identity(1, 1)), std::invalid_argument);
  ASSERT_THROW(complete_povm(Matrix::Identity(3, 3)), std::invalid_argument);
  Matrix rows = Matrix::Zero(2, 4);
  rows(0, 0) = rows(1, 0) = 1.0;
  ASSERT_THROW(complete_povm(rows), std::invalid_argument);
}

TEST(naimark, block_circulant_structure) {
  const BlockCirculantParts parts = block_circulant_parts(qutrit_naimark_unitary().completion);
  ASSERT_LT(parts.off_diagonal_norm, 1e-12);
  const Complex w = omega(), w2 = omega() * omega();
  const double r6 = std::sqrt(6.0);
  const double r2 = std::sqrt(2.0);
  Matrix q1(3, 3), q2(3, 3), q3(3, 3);
  q1 << 0.0, w - w2, w2 - w, r2, r2, r2, 2.0, -1.0, -1.0;
  q2 << w2 - w, 0.0, w - w2, r2, r2, r2, -w2, 2.0 * w2, -w2;
  q3 << w - w2, w2 - w, 0.0, r2, r2, r2, -w, -w, 2.0 * w;
  ASSERT_TRUE((parts.q1.matrix() - q1 / r6).isZero(1e-14));
  ASSERT_TRUE((parts.q2.matrix() - q2 / r6).isZero(1e-14));
  ASSERT_TRUE((parts.q3.matrix() - q3 / r6).isZero(1e-14));
  ASSERT_TRUE((parts.reassemble() - qutrit_naimark_unitary().completion.matrix()).isZero(1e-14));
}

TEST(naimark, block_circulant_identity) {
  const BlockCirculantParts parts = block_circulant_parts(UnitaryMatrix::identity(9));
  ASSERT_TRUE(parts.a.isIdentity(1e-15));
  ASSERT_TRUE(parts.b.isZero(1e-15));
  ASSERT_TRUE(parts.c.isZero(1e-15));
  ASSERT_TRUE(parts.q1.matrix().isIdentity(1e-14));
  ASSERT_TRUE(parts.q3.matrix().isIdentity(1e-14));
}

TEST(naimark, block_circulant_rejects_other_matrices) {
  ASSERT_THROW(block_circulant_parts(UnitaryMatrix::from_matrix(haar_unitary(9, 3))), std::invalid_argument);
  ASSERT_THROW(block_circulant_parts(UnitaryMatrix::identity(4)), std::invalid_argument);
}

TEST(naimark, json_round_trip) {
  const NaimarkExtension ext = qutrit_naimark_unitary();
  const NaimarkExtension back = naimark_from_json(Json::parse(naimark_to_json(ext).dump()));
  ASSERT_EQ(back.embedding, ext.embedding);
  ASSERT_EQ(back.system_dim, 3);
  ASSERT_TRUE((back.completion.matrix() - ext.completion.matrix()).isZero(1e-15));
}
