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

#include "sicmp/tomography.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "sicmp/rng.h"

namespace sicmp {
namespace {

std::vector<std::array<int, 3>> all_triples(int n) {
  std::vector<std::array<int, 3>> t;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) t.push_back({i, j, k});
  return t;
}

RealVector sic_probabilities(const PureState& psi, const SicPovm& povm) {
  RealVector p(povm.num_outcomes());
  for (int i = 0; i < povm.num_outcomes(); ++i) {
    p(i) = std::norm(povm.vectors[i].amplitudes().dot(psi.amplitudes())) / povm.dim;
  }
  return p;
}

struct LmRun {
  Vector psi;
  double cost = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Columns of `u` are the SIC vectors. psi is kept at unit norm.
class PureFit {
 public:
  PureFit(const RealVector& f, const Matrix& u) : f_(f), u_(u), d_(static_cast<int>(u.rows())) {}

  RealVector probabilities(const Vector& psi) const {
    return (u_.adjoint() * psi).cwiseAbs2() / static_cast<double>(d_);
  }

  double cost(const Vector& psi) const { return 0.5 * (probabilities(psi) - f_).squaredNorm(); }

  // d p_i / d(Re psi_k, Im psi_k) at unit-norm psi, including the norm factor.
  Eigen::MatrixXd jacobian(const Vector& psi) const {
    const Vector a = u_.adjoint() * psi;
    const Eigen::Index n = u_.cols();
    Eigen::MatrixXd j(n, 2 * d_);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double a2 = std::norm(a(i));
      for (int k = 0; k < d_; ++k) {
        const Complex z = std::conj(a(i) * u_(k, i));
        j(i, k) = (2.0 * z.real() - 2.0 * a2 * psi(k).real()) / d_;
        j(i, d_ + k) = (-2.0 * z.imag() - 2.0 * a2 * psi(k).imag()) / d_;
      }
    }
    return j;
  }

  LmRun run(Vector psi, double tol, int max_iter) const {
    LmRun out;
    psi.normalize();
    double c = cost(psi);
    double lambda = -1.0;
    int it = 0;
    for (; it < max_iter; ++it) {
      const RealVector r = probabilities(psi) - f_;
      const Eigen::MatrixXd j = jacobian(psi);
      const Eigen::VectorXd g = j.transpose() * r;
      out.gradient_norm = g.norm();
      if (out.gradient_norm < tol) {
        out.converged = true;
        break;
      }
      const Eigen::MatrixXd h = j.transpose() * j;
      if (lambda < 0.0) lambda = 1e-3 * std::max(h.diagonal().maxCoeff(), 1e-12);
      bool accepted = false;
      while (!accepted && lambda < 1e12) {
        Eigen::MatrixXd damped = h;
        damped.diagonal().array() += lambda;
        const Eigen::VectorXd step = damped.ldlt().solve(-g);
        Vector trial = psi;
        for (int k = 0; k < d_; ++k) trial(k) += Complex(step(k), step(d_ + k));
        trial.normalize();
        const double tc = cost(trial);
        if (tc <= c) {
          psi = trial;
          c = tc;
          lambda = std::max(lambda / 3.0, 1e-15);
          accepted = true;
        } else {
          lambda *= 4.0;
        }
      }
      if (!accepted) break;  // no descent possible at working precision
    }
    out.psi = psi;
    out.cost = c;
    out.iterations = it;
    return out;
  }

 private:
  RealVector f_;
  Matrix u_;
  int d_;
};

Matrix sic_vector_columns(const SicPovm& povm) {
  Matrix u(povm.dim, povm.num_outcomes());
  for (int i = 0; i < povm.num_outcomes(); ++i) u.col(i) = povm.vectors[i].amplitudes();
  return u;
}

}  // namespace

Matrix linear_reconstruct_matrix(const RealVector& p, const SicPovm& povm) {
  if (p.size() != povm.num_outcomes()) throw std::invalid_argument("linear_reconstruct: length mismatch");
  const double d = povm.dim;
  Matrix rho = Matrix::Zero(povm.dim, povm.dim);
  for (int i = 0; i < povm.num_outcomes(); ++i) {
    rho += ((d + 1.0) * p(i) - 1.0 / d) * povm.vectors[i].projector();
  }
  return 0.5 * (rho + rho.adjoint());
}

DensityOperator linear_reconstruct(const OutcomeDistribution& p, const SicPovm& povm) {
  return DensityOperator::from_matrix(linear_reconstruct_matrix(p.probs(), povm), 1e-10);
}

bool has_affine_plane_structure(const AffineLineSet& lines) {
  if (lines.triples.size() != 12) return false;
  std::set<std::array<int, 3>> unique;
  std::array<int, 9> on_point{};
  std::map<std::pair<int, int>, int> pair_count;
  for (auto t : lines.triples) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[2] > 8 || t[0] == t[1] || t[1] == t[2]) return false;
    if (!unique.insert(t).second) return false;
    for (int k = 0; k < 3; ++k) {
      ++on_point[t[k]];
      for (int l = k + 1; l < 3; ++l) ++pair_count[{t[k], t[l]}];
    }
  }
  if (std::any_of(on_point.begin(), on_point.end(), [](int c) { return c != 4; })) return false;
  // Two points determine exactly one line.
  if (pair_count.size() != 36) return false;
  if (std::any_of(pair_count.begin(), pair_count.end(), [](const auto& kv) { return kv.second != 1; })) {
    return false;
  }
  auto disjoint = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int x : a)
      if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    return true;
  };
  const std::vector<std::array<int, 3>> ls(unique.begin(), unique.end());
  std::set<std::set<int>> classes;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::set<int> cls{static_cast<int>(i)};
    for (std::size_t j = 0; j < ls.size(); ++j) {
      if (j != i && disjoint(ls[i], ls[j])) cls.insert(static_cast<int>(j));
    }
    if (cls.size() != 3) return false;
    for (int a : cls)
      for (int b : cls)
        if (a != b && !disjoint(ls[a], ls[b])) return false;
    classes.insert(cls);
  }
  return classes.size() == 4;
}

AffineLineSet derive_affine_lines(const SicPovm& povm, int samples, std::uint64_t seed) {
  if (povm.dim != 3 || povm.num_outcomes() != 9) {
    throw std::invalid_argument("derive_affine_lines: qutrit SIC required");
  }
  const auto triples = all_triples(9);
  const int nt = static_cast<int>(triples.size());
  if (samples < nt) throw std::invalid_argument("derive_affine_lines: need at least 84 samples");
  Eigen::MatrixXd a(samples, nt);
  Eigen::VectorXd b(samples);
  for (int s = 0; s < samples; ++s) {
    const RealVector p = sic_probabilities(random_pure_state(3, SplitMix64::at(seed, s)), povm);
    for (int t = 0; t < nt; ++t) a(s, t) = p(triples[t][0]) * p(triples[t][1]) * p(triples[t][2]);
    b(s) = p.array().cube().sum() / 3.0;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeFullV);
  svd.setThreshold(1e-9);
  const Eigen::VectorXd x0 = svd.solve(b);
  if ((a * x0 - b).norm() > 1e-10 * std::max(1.0, b.norm())) {
    throw std::runtime_error("derive_affine_lines: cubic identity is not spanned by triple monomials");
  }
  const int rank = static_cast<int>(svd.rank());
  const int nullity = nt - rank;
  if (nullity > 16) throw std::runtime_error("derive_affine_lines: null space too large to enumerate");
  const Eigen::MatrixXd null = svd.matrixV().rightCols(nullity);

  // Any 0/1 solution x0 + N c is fixed by its values on `nullity` pivot rows
  // of N, so enumerating 0/1 on those rows finds every 0/1 solution.
  std::vector<Eigen::VectorXd> solutions;
  std::vector<int> pivots;
  Eigen::MatrixXd np;
  if (nullity > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(null.transpose());
    for (int k = 0; k < nullity; ++k) pivots.push_back(static_cast<int>(qr.colsPermutation().indices()(k)));
    np.resize(nullity, nullity);
    for (int k = 0; k < nullity; ++k) np.row(k) = null.row(pivots[k]);
  }
  for (std::uint32_t mask = 0; mask < (1u << nullity); ++mask) {
    Eigen::VectorXd x = x0;
    if (nullity > 0) {
      Eigen::VectorXd rhs(nullity);
      for (int k = 0; k < nullity; ++k) rhs(k) = ((mask >> k) & 1u) - x0(pivots[k]);
      x += null * np.fullPivLu().solve(rhs);
    }
    const bool binary = (x.array() * (x.array() - 1.0)).abs().maxCoeff() < 1e-6;
    if (binary) solutions.push_back(x.array().round().matrix());
  }
  if (solutions.size() != 1) {
    throw std::runtime_error("derive_affine_lines: expected a unique 0/1 solution, found " +
                             std::to_string(solutions.size()));
  }
  AffineLineSet lines;
  for (int t = 0; t < nt; ++t) {
    if (solutions.front()(t) > 0.5) lines.triples.push_back(triples[t]);
  }
  if (!has_affine_plane_structure(lines)) {
    throw std::runtime_error("derive_affine_lines: solution lacks AG(2,3) structure");
  }
  return lines;
}

PurityResiduals purity_residuals(const RealVector& p, const AffineLineSet& lines) {
  if (p.size() != 9) throw std::invalid_argument("purity_residuals: expected 9 probabilities");
  PurityResiduals r;
  r.quad = p.squaredNorm() - 1.0 / 6.0;
  double lines_sum = 0.0;
  for (const auto& t : lines.triples) lines_sum += p(t[0]) * p(t[1]) * p(t[2]);
  r.cubic = p.array().cube().sum() / 3.0 - lines_sum;
  return r;
}

PureStateEstimate fit_pure_state(const RealVector& f, const SicPovm& povm, const Vector& start, double tol,
                                 int max_iter) {
  if (f.size() != povm.num_outcomes()) throw std::invalid_argument("fit_pure_state: length mismatch");
  if (start.size() != povm.dim || start.norm() == 0.0) throw std::invalid_argument("fit_pure_state: bad start");
  if (!(tol > 0.0) || max_iter < 1) throw std::invalid_argument("fit_pure_state: bad solver settings");
  const PureFit fit(f, sic_vector_columns(povm));
  const LmRun run = fit.run(start, tol, max_iter);

  PureStateEstimate e;
  e.p_star = fit.probabilities(run.psi);
  e.distance = (e.p_star - f).norm();
  e.gradient_norm = run.gradient_norm;
  e.iterations = run.iterations;
  e.converged = run.converged;
  Eigen::SelfAdjointEigenSolver<Matrix> es(linear_reconstruct_matrix(e.p_star, povm));
  const int d = povm.dim;
  e.eigenvalue_gap = es.eigenvalues()(d - 1) - es.eigenvalues()(d - 2);
  Vector v = es.eigenvectors().col(d - 1);
  // Fix the global phase so the largest component is real and positive.
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  v *= std::conj(v(imax)) / std::abs(v(imax));
  e.psi_star = v.normalized();
  e.rho_star = DensityOperator::from_pure(PureState::normalized(e.psi_star));
  return e;
}

PureStateEstimate nearest_pure_distribution(const RealVector& f, const SicPovm& povm, double tol, int max_iter) {
  if (f.size() != povm.num_outcomes()) throw std::invalid_argument("nearest_pure_distribution: length mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> start(linear_reconstruct_matrix(f, povm));
  std::optional<PureStateEstimate> best;
  for (int k = povm.dim - 1; k >= 0; --k) {
    PureStateEstimate e = fit_pure_state(f, povm, start.eigenvectors().col(k), tol, max_iter);
    if (!best || e.distance < best->distance - 1e-15) best = std::move(e);
  }
  return *best;
}

PureStateEstimate project_to_pure_manifold(const RealVector& f, const AffineLineSet& lines, const SicPovm& povm,
                                           double tol, int max_iter) {
  if (f.size() != 9) throw std::invalid_argument("project_to_pure_manifold: expected 9 frequencies");
  if ((f.array() < 0.0).any() || !f.allFinite()) {
    throw std::invalid_argument("project_to_pure_manifold: negative or non-finite frequency");
  }
  if (std::abs(f.sum() - 1.0) > 1e-9) throw std::invalid_argument("project_to_pure_manifold: frequencies must sum to 1");
  PureStateEstimate e = nearest_pure_distribution(f, povm, tol, max_iter);
  const PurityResiduals r = purity_residuals(e.p_star, lines);
  e.residual_quad = r.quad;
  e.residual_cubic = r.cubic;
  return e;
}

PureStateEstimate project_to_pure_manifold(const RealVector& f, const AffineLineSet& lines, double tol,
                                           int max_iter) {
  return project_to_pure_manifold(f, lines, qutrit_sic(), tol, max_iter);
}

double estimate_fidelity(const DensityOperator& rho_est, const DensityOperator& rho_true) {
  if (rho_est.dim() != rho_true.dim()) throw std::invalid_argument("estimate_fidelity: dimension mismatch");
  auto pure_vector = [](const DensityOperator& r) -> std::optional<Vector> {
    if (purity_traces(r).tr_rho2 < 1.0 - 1e-10) return std::nullopt;
    Eigen::SelfAdjointEigenSolver<Matrix> es(r.matrix());
    return es.eigenvectors().col(r.dim() - 1);
  };
  double f = 0.0;
  if (auto v = pure_vector(rho_true)) {
    f = (v->adjoint() * rho_est.matrix() * *v)(0, 0).real();
  } else if (auto w = pure_vector(rho_est)) {
    f = (w->adjoint() * rho_true.matrix() * *w)(0, 0).real();
  } else {
    auto sqrt_psd = [](const Matrix& m) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(m);
      const RealVector s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
      return Matrix(es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint());
    };
    const Matrix sa = sqrt_psd(rho_est.matrix());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sa * rho_true.matrix() * sa, Eigen::EigenvaluesOnly);
    const double t = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    f = t * t;
  }
  return std::clamp(f, 0.0, 1.0);
}

Json lines_to_json(const AffineLineSet& lines) {
  Json j = Json::array();
  for (const auto& t : lines.triples) j.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
  return j;
}

Json estimate_to_json(const PureStateEstimate& e) {
  return Json{{"p_star", real_vector_to_json(e.p_star)},
              {"rho", matrix_to_json(e.rho_star.matrix())},
              {"psi", vector_to_json(e.psi_star)},
              {"residual_quad", e.residual_quad},
              {"residual_cubic", e.residual_cubic},
              {"distance", e.distance},
              {"gradient_norm", e.gradient_norm},
              {"eigenvalue_gap", e.eigenvalue_gap},
              {"iterations", e.iterations},
              {"converged", e.converged}};
}

}  // namespace sicmp
