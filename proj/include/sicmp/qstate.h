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

#ifndef SICMP_QSTATE_H
#define SICMP_QSTATE_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sicmp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default tolerances. Unitarity and Hermiticity checks use `kOperatorTol`;
/// normalization of states and distributions uses `kNormTol`.
inline constexpr double kOperatorTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

inline constexpr double kPi = 3.14159265358979323846;

/// e^{i theta}, evaluated rather than written as a decimal literal.
inline Complex cis(double theta) { return std::polar(1.0, theta); }

/// Primitive cube root of unity e^{2 pi i / 3}.
inline Complex omega() { return cis(2.0 * kPi / 3.0); }

/// Normalized d-level state vector.
class PureState {
 public:
  /// Throws std::invalid_argument unless `amplitudes` has unit norm within `tol`.
  static PureState from_amplitudes(Vector amplitudes, double tol = kNormTol);
  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(const Vector& amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](int k) const { return amplitudes_(k); }

  /// |psi><psi|.
  Matrix projector() const;

 private:
  explicit PureState(Vector a) : amplitudes_(std::move(a)) {}
  Vector amplitudes_;
};

/// Hermitian, trace-one operator. Positivity is recorded, not required:
/// linear inversion of noisy statistics produces non-positive operators.
class DensityOperator {
 public:
  static DensityOperator from_matrix(Matrix m, double tol = kNormTol);
  static DensityOperator from_pure(const PureState& psi);
  static DensityOperator maximally_mixed(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  bool is_psd() const { return psd_; }
  /// Ascending eigenvalues.
  const RealVector& eigenvalues() const { return eigenvalues_; }

 private:
  explicit DensityOperator(Matrix m);
  Matrix matrix_;
  RealVector eigenvalues_;
  bool psd_ = false;
};

class UnitaryMatrix {
 public:
  /// Throws std::invalid_argument if `m` is not square or ||M^dag M - I||_F > tol.
  static UnitaryMatrix from_matrix(Matrix m, double tol = kOperatorTol);
  static UnitaryMatrix identity(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  Complex operator()(int r, int c) const { return matrix_(r, c); }
  UnitaryMatrix adjoint() const { return UnitaryMatrix(matrix_.adjoint()); }

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(a.matrix_ * b.matrix_);
  }

 private:
  explicit UnitaryMatrix(Matrix m) : matrix_(std::move(m)) {}
  Matrix matrix_;
};

/// Probability vector over measurement outcomes.
class OutcomeDistribution {
 public:
  /// Entries in [-1e-14, 0) are clamped to zero; anything more negative, or a
  /// total off by more than `tol`, throws std::invalid_argument.
  static OutcomeDistribution from_probs(RealVector probs, double tol = kNormTol);

  int size() const { return static_cast<int>(probs_.size()); }
  const RealVector& probs() const { return probs_; }
  double operator[](int i) const { return probs_(i); }

 private:
  explicit OutcomeDistribution(RealVector p) : probs_(std::move(p)) {}
  RealVector probs_;
};

struct UnitarityReport {
  bool ok = false;
  double defect = 0.0;  // ||M^dag M - I||_F
};

/// Throws std::invalid_argument for a non-square matrix.
UnitarityReport check_unitary(const Matrix& m, double tol = kOperatorTol);

bool is_hermitian(const Matrix& m, double tol = kOperatorTol);

/// tr(rho E), clamped to [0, 1]. Throws on dimension mismatch, a non-Hermitian
/// effect, or an imaginary part above 1e-12.
double born_probability(const DensityOperator& state, const Matrix& effect,
                        double tol = kOperatorTol);

struct PurityTraces {
  double tr_rho2 = 0.0;
  double tr_rho3 = 0.0;
};

PurityTraces purity_traces(const DensityOperator& rho);

/// Haar-random pure state: i.i.d. standard complex Gaussians, normalized.
/// Bit-for-bit reproducible for a fixed seed. Throws if dim < 2.
PureState random_pure_state(int dim, std::uint64_t seed);

/// min over gamma of ||a - e^{i gamma} b||_F.
double global_phase_distance(const Matrix& a, const Matrix& b);

/// Compares after dividing each operand by the phase of its largest-magnitude
/// entry (the first such entry of `a`, the same position in `b`).
bool equal_up_to_global_phase(const Matrix& a, const Matrix& b, double tol = kOperatorTol);

}  // namespace sicmp

#endif  // SICMP_QSTATE_H
