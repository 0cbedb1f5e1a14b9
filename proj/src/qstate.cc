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

#include "sicmp/qstate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/random/normal_distribution.hpp>

#include "sicmp/rng.h"

namespace sicmp {

PureState PureState::from_amplitudes(Vector amplitudes, double tol) {
  if (amplitudes.size() < 1) throw std::invalid_argument("PureState: empty amplitude vector");
  const double n2 = amplitudes.squaredNorm();
  if (std::abs(n2 - 1.0) > tol) {
    throw std::invalid_argument("PureState: squared norm " + std::to_string(n2) + " is not 1");
  }
  return PureState(std::move(amplitudes));
}

PureState PureState::normalized(const Vector& amplitudes) {
  const double n = amplitudes.norm();
  if (amplitudes.size() < 1 || n == 0.0) {
    throw std::invalid_argument("PureState: cannot normalize a zero vector");
  }
  return PureState(amplitudes / n);
}

Matrix PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

DensityOperator::DensityOperator(Matrix m) : matrix_(std::move(m)) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
  eigenvalues_ = es.eigenvalues();
  psd_ = eigenvalues_.minCoeff() >= -kPsdTol;
}

DensityOperator DensityOperator::from_matrix(Matrix m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("DensityOperator: matrix must be square and nonempty");
  }
  if (!is_hermitian(m, std::max(tol, kOperatorTol))) {
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0)) > tol) {
    throw std::invalid_argument("DensityOperator: trace is not 1");
  }
  // Symmetrize so downstream eigen-solvers see an exactly Hermitian matrix.
  Matrix h = 0.5 * (m + m.adjoint());
  return DensityOperator(std::move(h));
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  return DensityOperator(psi.projector());
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  if (dim < 1) throw std::invalid_argument("maximally_mixed: dim must be positive");
  return DensityOperator(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

UnitaryMatrix UnitaryMatrix::from_matrix(Matrix m, double tol) {
  const UnitarityReport r = check_unitary(m, tol);
  if (!r.ok) {
    throw std::invalid_argument("UnitaryMatrix: unitarity defect " + std::to_string(r.defect));
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  return UnitaryMatrix(Matrix::Identity(dim, dim));
}

OutcomeDistribution OutcomeDistribution::from_probs(RealVector probs, double tol) {
  if (probs.size() < 1) throw std::invalid_argument("OutcomeDistribution: empty");
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (!std::isfinite(probs(i)) || probs(i) < -1e-14) {
      throw std::invalid_argument("OutcomeDistribution: negative or non-finite entry");
    }
    probs(i) = std::max(probs(i), 0.0);
  }
  if (std::abs(probs.sum() - 1.0) > tol) {
    throw std::invalid_argument("OutcomeDistribution: entries do not sum to 1");
  }
  return OutcomeDistribution(std::move(probs));
}

UnitarityReport check_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("check_unitary: matrix is not square");
  UnitarityReport r;
  r.defect = (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm();
  r.ok = r.defect <= tol;
  return r;
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() <= tol;
}

double born_probability(const DensityOperator& state, const Matrix& effect, double tol) {
  if (effect.rows() != state.dim() || effect.cols() != state.dim()) {
    throw std::invalid_argument("born_probability: dimension mismatch");
  }
  if (!is_hermitian(effect, tol)) {
    throw std::invalid_argument("born_probability: effect is not Hermitian");
  }
  const Complex p = (state.matrix() * effect).trace();
  if (std::abs(p.imag()) > 1e-12) {
    throw std::invalid_argument("born_probability: trace has an imaginary part");
  }
  return std::clamp(p.real(), 0.0, 1.0);
}

PurityTraces purity_traces(const DensityOperator& rho) {
  const Matrix r2 = rho.matrix() * rho.matrix();
  return {r2.trace().real(), (r2 * rho.matrix()).trace().real()};
}

PureState random_pure_state(int dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("random_pure_state: dim must be at least 2");
  SplitMix64 rng(seed);
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim);
  for (int k = 0; k < dim; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = Complex(re, im);
  }
  return PureState::normalized(v);
}

double global_phase_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("global_phase_distance: shape mismatch");
  }
  // The optimal phase aligns b with a: e^{ig} = <b, a> / |<b, a>|.
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).norm();
}

bool equal_up_to_global_phase(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(a(r, c)) == 0.0) return b.norm() <= tol;
  if (std::abs(b(r, c)) == 0.0) return false;
  const Complex pa = a(r, c) / std::abs(a(r, c));
  const Complex pb = b(r, c) / std::abs(b(r, c));
  return (a / pa - b / pb).norm() <= tol;
}

}  // namespace sicmp
