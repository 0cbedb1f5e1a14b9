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
#include <stdexcept>

namespace sicmp {

NaimarkExtension complete_povm(const Matrix& scaled_vectors) {
  const Eigen::Index m = scaled_vectors.rows();
  const Eigen::Index n = scaled_vectors.cols();
  if (m < 1 || n <= m) throw std::invalid_argument("complete_povm: need n > m >= 1");
  const double defect = (scaled_vectors * scaled_vectors.adjoint() - Matrix::Identity(m, m)).norm();
  if (defect > 1e-10) {
    throw std::invalid_argument("complete_povm: rows are not orthonormal (sum_i |e_i><e_i| != I)");
  }

  // Rows are orthonormal vectors in C^n; extend them to a basis.
  Matrix rows(n, n);
  rows.topRows(m) = scaled_vectors;
  Eigen::Index filled = m;
  for (Eigen::Index k = 0; k < n && filled < n; ++k) {
    Eigen::RowVectorXcd cand = Eigen::RowVectorXcd::Zero(n);
    cand(k) = 1.0;
    // Two passes of modified Gram-Schmidt keep the result orthogonal to rounding.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index r = 0; r < filled; ++r) {
        const Complex proj = rows.row(r).conjugate().cwiseProduct(cand).sum();
        cand -= proj * rows.row(r);
      }
    }
    const double norm = cand.norm();
    if (norm < 1e-8) continue;
    rows.row(filled++) = cand / norm;
  }
  if (filled != n) throw std::runtime_error("complete_povm: completion failed");

  NaimarkExtension ext;
  ext.system_dim = static_cast<int>(m);
  ext.scaled_vectors = scaled_vectors;
  ext.completion = UnitaryMatrix::from_matrix(rows, 1e-10);
  for (Eigen::Index k = 0; k < m; ++k) ext.embedding.push_back(static_cast<int>(k));
  return ext;
}

NaimarkExtension qubit_naimark_unitary() {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const Complex e = cis(kPi / 3), ec = cis(-kPi / 3);
  Matrix u(4, 4);
  u << s3, 1.0, e, ec,
       0.0, s2, s2 * ec, s2 * e,
       s3, -1.0, -e, -ec,
       0.0, s2, -s2, -s2;
  u /= std::sqrt(6.0);

  NaimarkExtension ext;
  ext.system_dim = 2;
  ext.completion = UnitaryMatrix::from_matrix(u, 1e-12);
  ext.embedding = {0, 1};
  ext.scaled_vectors = u.topRows(2);
  ext.povm = qubit_sic();
  return ext;
}

NaimarkExtension qutrit_naimark_unitary() {
  const double s2 = std::sqrt(2.0);
  const Complex w = omega(), w2 = omega() * omega();
  Matrix v(9, 9);
  v << 0.0, 0.0, 0.0, -1.0, -w2, -w, 1.0, w, w2,
       s2, s2, s2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
       1.0, w2, w, 1.0, w, w2, 0.0, 0.0, 0.0,
       1.0, w, w2, 0.0, 0.0, 0.0, -1.0, -w2, -w,
       0.0, 0.0, 0.0, s2, s2, s2, 0.0, 0.0, 0.0,
       0.0, 0.0, 0.0, 1.0, w2, w, 1.0, w, w2,
       -1.0, -w2, -w, 1.0, w, w2, 0.0, 0.0, 0.0,
       0.0, 0.0, 0.0, 0.0, 0.0, 0.0, s2, s2, s2,
       1.0, w, w2, 0.0, 0.0, 0.0, 1.0, w2, w;
  v /= std::sqrt(6.0);

  NaimarkExtension ext;
  ext.system_dim = 3;
  ext.completion = UnitaryMatrix::from_matrix(v, 1e-12);
  ext.embedding = {0, 3, 6};
  ext.scaled_vectors = Matrix(3, 9);
  for (int k = 0; k < 3; ++k) ext.scaled_vectors.row(k) = v.row(ext.embedding[k]);
  ext.povm = qutrit_sic();
  return ext;
}

Vector embed_state(const PureState& phi, int device_dim) {
  if (phi.dim() != device_dim) throw std::invalid_argument("embed_state: state dimension mismatch");
  Vector out = Vector::Zero(device_dim * device_dim);
  if (device_dim == 2) {
    out(0) = phi[0];
    out(1) = phi[1];
  } else if (device_dim == 3) {
    for (int k = 0; k < 3; ++k) out(3 * k) = phi[k];
  } else {
    throw std::invalid_argument("embed_state: unsupported device dimension");
  }
  return out;
}

Vector embed_state(const PureState& phi, const NaimarkExtension& ext) {
  if (phi.dim() != ext.system_dim) throw std::invalid_argument("embed_state: state dimension mismatch");
  Vector out = Vector::Zero(ext.num_modes());
  for (int k = 0; k < ext.system_dim; ++k) out(ext.embedding[k]) = phi[k];
  return out;
}

Matrix fourier_matrix() {
  const Complex w = omega(), w2 = omega() * omega();
  Matrix p(3, 3);
  p << 1.0, 1.0, 1.0,
       w2, w, 1.0,
       w, w2, 1.0;
  return p / std::sqrt(3.0);
}

Matrix BlockCirculantParts::reassemble() const {
  Matrix q = Matrix::Zero(9, 9);
  q.block(0, 0, 3, 3) = q1.matrix();
  q.block(3, 3, 3, 3) = q2.matrix();
  q.block(6, 6, 3, 3) = q3.matrix();
  return s.matrix().adjoint() * q * s.matrix();
}

BlockCirculantParts block_circulant_parts(const UnitaryMatrix& v) {
  if (v.dim() != 9) throw std::invalid_argument("block_circulant_parts: V must be 9x9");
  const Matrix& m = v.matrix();
  BlockCirculantParts parts;
  parts.a = m.block(0, 0, 3, 3);
  parts.b = m.block(0, 3, 3, 3);
  parts.c = m.block(0, 6, 3, 3);
  // Block row r is the first block row shifted right by r.
  const Matrix* first[3] = {&parts.a, &parts.b, &parts.c};
  for (int r = 1; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if ((m.block(3 * r, 3 * c, 3, 3) - *first[(c - r + 3) % 3]).norm() > 1e-10) {
        throw std::invalid_argument("block_circulant_parts: V is not block-circulant");
      }
    }
  }
  Matrix s(9, 9);
  const Matrix p = fourier_matrix();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) s.block(3 * r, 3 * c, 3, 3) = p(r, c) * Matrix::Identity(3, 3);
  }
  parts.s = UnitaryMatrix::from_matrix(s, 1e-12);
  const Matrix q = s * m * s.adjoint();
  Matrix off = q;
  for (int k = 0; k < 3; ++k) off.block(3 * k, 3 * k, 3, 3).setZero();
  parts.off_diagonal_norm = off.norm();
  if (parts.off_diagonal_norm > 1e-10) {
    throw std::runtime_error("block_circulant_parts: S V S^dag is not block diagonal");
  }
  parts.q1 = UnitaryMatrix::from_matrix(q.block(0, 0, 3, 3));
  parts.q2 = UnitaryMatrix::from_matrix(q.block(3, 3, 3, 3));
  parts.q3 = UnitaryMatrix::from_matrix(q.block(6, 6, 3, 3));
  return parts;
}

RealVector column_probabilities(const PureState& phi, const NaimarkExtension& ext) {
  const Vector embedded = embed_state(phi, ext);
  return (ext.completion.matrix().adjoint() * embedded).cwiseAbs2();
}

double verify_probability_scaling(const PureState& phi, const NaimarkExtension& ext) {
  if (phi.dim() != ext.system_dim) {
    throw std::invalid_argument("verify_probability_scaling: dimension mismatch");
  }
  const RealVector got = column_probabilities(phi, ext);
  RealVector expected(got.size());
  if (ext.povm) {
    if (ext.povm->num_outcomes() != got.size()) {
      throw std::invalid_argument("verify_probability_scaling: POVM size mismatch");
    }
    for (int j = 0; j < ext.povm->num_outcomes(); ++j) {
      expected(j) = std::norm(ext.povm->vectors[j].amplitudes().dot(phi.amplitudes())) / ext.system_dim;
    }
  } else {
    expected = (ext.scaled_vectors.adjoint() * phi.amplitudes()).cwiseAbs2();
  }
  return (got - expected).cwiseAbs().maxCoeff();
}

Json naimark_to_json(const NaimarkExtension& ext) {
  Json j{{"system_dim", ext.system_dim},
         {"unitary", matrix_to_json(ext.completion.matrix())},
         {"embedding", Json::array()}};
  // 1-based modes in files.
  for (int e : ext.embedding) j["embedding"].push_back(e + 1);
  if (ext.povm) j["sic"] = sic_to_json(*ext.povm);
  return j;
}

NaimarkExtension naimark_from_json(const Json& j) {
  NaimarkExtension ext;
  ext.system_dim = j.at("system_dim").get<int>();
  ext.completion = UnitaryMatrix::from_matrix(matrix_from_json(j.at("unitary")));
  for (const auto& e : j.at("embedding")) {
    const int mode = e.get<int>() - 1;
    if (mode < 0 || mode >= ext.completion.dim()) throw std::invalid_argument("naimark JSON: embedding out of range");
    ext.embedding.push_back(mode);
  }
  if (static_cast<int>(ext.embedding.size()) != ext.system_dim) {
    throw std::invalid_argument("naimark JSON: embedding size != system_dim");
  }
  ext.scaled_vectors = Matrix(ext.system_dim, ext.completion.dim());
  for (int k = 0; k < ext.system_dim; ++k) ext.scaled_vectors.row(k) = ext.completion.matrix().row(ext.embedding[k]);
  if (j.contains("sic")) ext.povm = sic_from_json(j.at("sic"));
  return ext;
}

}  // namespace sicmp
