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

#include "sicmp/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sicmp/multiport.h"
#include "sicmp/naimark.h"
#include "sicmp/optics_sim.h"
#include "sicmp/rng.h"
#include "sicmp/sic.h"
#include "sicmp/tomography.h"

namespace sicmp {
namespace {

CheckResult at_most(std::string name, double value, double threshold, std::string detail = {}) {
  return {std::move(name), value <= threshold, value, threshold, std::move(detail)};
}

DensityOperator random_density(int dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix m = Matrix::Zero(dim, dim);
  double total = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double w = rng.uniform();
    m += w * random_pure_state(dim, rng()).projector();
    total += w;
  }
  return DensityOperator::from_matrix(m / total, 1e-10);
}

double trace_norm(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace

std::vector<CheckResult> verify_all(const VerifyOptions& options) {
  const auto& tol = options.tolerances;
  std::vector<CheckResult> out;

  const SicPovm sic2 = qubit_sic();
  const SicPovm sic3 = qutrit_sic();
  out.push_back(at_most("sic gram (d=2)", verify_sic(sic2, tol.at("sic")).gram_deviation, tol.at("sic")));
  out.push_back(at_most("sic gram (d=3)", verify_sic(sic3, tol.at("sic")).gram_deviation, tol.at("sic")));

  const NaimarkExtension ext2 = qubit_naimark_unitary();
  const NaimarkExtension ext3 = qutrit_naimark_unitary();
  for (const NaimarkExtension* ext : {&ext2, &ext3}) {
    const std::string tag = ext->system_dim == 2 ? " (U)" : " (V)";
    const Matrix& u = ext->completion.matrix();
    out.push_back(at_most("naimark unitarity" + tag, check_unitary(u).defect, tol.at("unitarity")));
    double cols = 0.0;
    for (int j = 0; j < u.cols(); ++j) {
      cols = std::max(cols, (u.adjoint() * u.col(j) - Matrix::Identity(u.rows(), u.cols()).col(j)).norm());
    }
    out.push_back(at_most("naimark columns" + tag, cols, tol.at("unitarity")));
    double scaling = 0.0;
    for (int s = 0; s < options.random_states; ++s) {
      const PureState phi = random_pure_state(ext->system_dim, SplitMix64::at(options.seed, s));
      scaling = std::max(scaling, verify_probability_scaling(phi, *ext));
    }
    out.push_back(at_most("naimark probability scaling" + tag, scaling, tol.at("unitarity")));
  }

  {
    const auto f = qubit_factors();
    Matrix prod = Matrix::Identity(4, 4);
    for (const auto& m : f) prod *= m;
    out.push_back(at_most("factorization U1..U7 = U", (prod - ext2.completion.matrix()).norm(), tol.at("unitarity")));

    const BlockCirculantParts parts = block_circulant_parts(ext3.completion);
    out.push_back(at_most("block diagonalization S^dag Q S = V",
                          (parts.reassemble() - ext3.completion.matrix()).norm(), tol.at("unitarity")));
    out.push_back(at_most("S V S^dag off-diagonal blocks", parts.off_diagonal_norm, tol.at("unitarity")));

    const Matrix r = qutrit_rotation().cast<Complex>();
    const auto d = qutrit_phase_diagonals();
    const auto g = qutrit_row_permutations();
    const std::array<const UnitaryMatrix*, 3> qs{&parts.q1, &parts.q2, &parts.q3};
    double qk = 0.0;
    for (int k = 0; k < 3; ++k) qk = std::max(qk, (qs[k]->adjoint().matrix() - g[k] * r * d[k]).norm());
    out.push_back(at_most("factorization Q_k^dag = G_k R D_k", qk, tol.at("unitarity")));

    const Eigen::Matrix3d euler =
        rotation_r1(-kPi / 4) * rotation_r2(-std::acos(-1.0 / std::sqrt(3.0))) * rotation_r3(kPi / 2);
    out.push_back(at_most("euler angles of R", (euler - qutrit_rotation()).norm(), tol.at("unitarity")));
  }

  const OpticalNetlist net2 = qubit_sic_netlist();
  const OpticalNetlist net3 = qutrit_sic_netlist();
  out.push_back(at_most("recomposition (qubit netlist)",
                        verify_netlist(net2, ext2.completion.adjoint().matrix(), tol.at("recompose")).distance,
                        tol.at("recompose")));
  out.push_back(at_most("recomposition (qutrit netlist)",
                        verify_netlist(net3, ext3.completion.adjoint().matrix(), tol.at("recompose")).distance,
                        tol.at("recompose")));
  out.push_back(at_most("element count (qubit)", element_count(net2), 7));
  out.push_back(at_most("element count (qutrit)", element_count(net3), 44));
  const OpticalNetlist reck2 = reck_decompose(ext2.completion.adjoint());
  const OpticalNetlist reck3 = reck_decompose(ext3.completion.adjoint());
  out.push_back(at_most("element count (reck 4x4)", element_count(reck2), 15));
  out.push_back(at_most("element count (reck 9x9)", element_count(reck3), 80));
  out.push_back(at_most("recomposition (reck 4x4)",
                        verify_netlist(reck2, ext2.completion.adjoint().matrix(), tol.at("recompose")).distance,
                        tol.at("recompose")));
  out.push_back(at_most("recomposition (reck 9x9)",
                        verify_netlist(reck3, ext3.completion.adjoint().matrix(), tol.at("recompose")).distance,
                        tol.at("recompose")));

  for (const SicPovm* povm : {&sic2, &sic3}) {
    double worst = 0.0;
    for (int s = 0; s < options.random_states; ++s) {
      const DensityOperator rho = random_density(povm->dim, SplitMix64::at(options.seed + 1, s));
      const Matrix back = linear_reconstruct(detector_distribution(rho, *povm), *povm).matrix();
      worst = std::max(worst, trace_norm(back - rho.matrix()));
    }
    out.push_back(at_most("linear round trip (d=" + std::to_string(povm->dim) + ")", worst, 1e-9));
  }

  try {
    const AffineLineSet lines = derive_affine_lines(sic3);
    out.push_back({"affine plane structure", has_affine_plane_structure(lines), 0.0, 0.0,
                   std::to_string(lines.triples.size()) + " lines"});
    double quad = 0.0, cubic = 0.0;
    for (int s = 0; s < options.manifold_states; ++s) {
      const auto p = detector_distribution(
          DensityOperator::from_pure(random_pure_state(3, SplitMix64::at(options.seed + 2, s))), sic3);
      const PurityResiduals r = purity_residuals(p.probs(), lines);
      quad = std::max(quad, std::abs(r.quad));
      cubic = std::max(cubic, std::abs(r.cubic));
    }
    out.push_back(at_most("purity identity sum p^2 = 1/6", quad, 1e-10));
    out.push_back(at_most("purity identity (cubic lines)", cubic, 1e-10));
  } catch (const std::exception& e) {
    out.push_back({"affine plane structure", false, 0.0, 0.0, e.what()});
  }

  for (const auto& path : options.netlists) {
    CheckResult c{"netlist file " + path.filename().string(), false, 0.0, 0.0, {}};
    try {
      const auto issues = check_netlist(netlist_from_json(read_json_file(path)));
      c.value = static_cast<double>(issues.size());
      c.pass = issues.empty();
      for (const auto& i : issues) c.detail += (c.detail.empty() ? "" : "; ") + i;
    } catch (const std::exception& e) {
      c.value = 1.0;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string format_check_table(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  char buf[160];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "%-4s  %-40s  %11.3e  <= %9.3e", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value,
                  c.threshold);
    os << buf;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace sicmp
