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

#include "sicmp/multiport.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sicmp {
namespace {

constexpr double kZeroPhase = 1e-13;

// Left-multiplies rows (a, b) of m by the 2x2 matrix t.
void apply_rows(Matrix& m, int a, int b, const Eigen::Matrix2cd& t) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const Complex x = m(a, c), y = m(b, c);
    m(a, c) = t(0, 0) * x + t(0, 1) * y;
    m(b, c) = t(1, 0) * x + t(1, 1) * y;
  }
}

Eigen::Matrix2cd beam_splitter_matrix(double eps) {
  const double r = std::sqrt(eps), t = std::sqrt(1.0 - eps);
  Eigen::Matrix2cd m;
  m << r, t, t, -r;
  return m;
}

}  // namespace

OpticalElement OpticalElement::beam_splitter(int a, int b, double eps) {
  return {ElementKind::kBeamSplitter, a, b, std::clamp(eps, 0.0, 1.0), 0.0};
}

OpticalElement OpticalElement::phase_shifter(int mode, double phase) {
  return {ElementKind::kPhaseShifter, mode, -1, 0.0, wrap_phase(phase)};
}

OpticalElement OpticalElement::mode_swap(int a, int b) {
  return {ElementKind::kModeSwap, a, b, 0.0, 0.0};
}

Matrix OpticalElement::local_matrix() const {
  switch (kind) {
    case ElementKind::kBeamSplitter:
      return beam_splitter_matrix(reflectivity);
    case ElementKind::kPhaseShifter:
      return Matrix::Constant(1, 1, cis(phase));
    case ElementKind::kModeSwap: {
      Matrix m(2, 2);
      m << 0.0, 1.0, 1.0, 0.0;
      return m;
    }
  }
  return {};
}

OpticalElement OpticalElement::inverse() const {
  OpticalElement e = *this;
  if (kind == ElementKind::kPhaseShifter) e.phase = wrap_phase(-phase);
  return e;
}

double wrap_phase(double phase) {
  double w = std::remainder(phase, 2.0 * kPi);  // [-pi, pi]
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

std::vector<std::string> check_netlist(const OpticalNetlist& net) {
  std::vector<std::string> issues;
  if (net.num_modes < 1) issues.push_back("netlist has no modes");
  auto in_range = [&](int m) { return m >= 0 && m < net.num_modes; };
  for (std::size_t i = 0; i < net.elements.size(); ++i) {
    const auto& e = net.elements[i];
    const std::string where = "element " + std::to_string(i + 1) + ": ";
    if (!in_range(e.mode_a)) issues.push_back(where + "mode out of range");
    if (e.kind == ElementKind::kPhaseShifter) {
      if (!std::isfinite(e.phase)) issues.push_back(where + "non-finite phase");
      continue;
    }
    if (!in_range(e.mode_b)) issues.push_back(where + "mode out of range");
    if (e.mode_a == e.mode_b) issues.push_back(where + "repeated mode");
    if (e.kind == ElementKind::kBeamSplitter &&
        !(std::isfinite(e.reflectivity) && e.reflectivity >= 0.0 && e.reflectivity <= 1.0)) {
      issues.push_back(where + "beam splitter reflectivity " + std::to_string(e.reflectivity) +
                       " outside [0, 1]");
    }
  }
  return issues;
}

UnitaryMatrix recompose(const OpticalNetlist& net) {
  const auto issues = check_netlist(net);
  if (!issues.empty()) throw std::invalid_argument("recompose: " + issues.front());
  Matrix m = Matrix::Identity(net.num_modes, net.num_modes);
  for (const auto& e : net.elements) {
    if (e.kind == ElementKind::kPhaseShifter) {
      m.row(e.mode_a) *= cis(e.phase);
    } else {
      apply_rows(m, e.mode_a, e.mode_b, e.local_matrix());
    }
  }
  return UnitaryMatrix::from_matrix(std::move(m), 1e-10);
}

ElementTally tally(const OpticalNetlist& net) {
  ElementTally t;
  for (const auto& e : net.elements) {
    switch (e.kind) {
      case ElementKind::kBeamSplitter: ++t.beam_splitters; break;
      case ElementKind::kPhaseShifter: ++t.phase_shifters; break;
      case ElementKind::kModeSwap: ++t.swaps; break;
    }
  }
  return t;
}

int element_count(const OpticalNetlist& net) {
  const ElementTally t = tally(net);
  return t.beam_splitters + t.phase_shifters;
}

OpticalNetlist simplify(OpticalNetlist net) {
  std::vector<OpticalElement> out;
  out.reserve(net.elements.size());
  for (OpticalElement e : net.elements) {
    if (e.kind == ElementKind::kBeamSplitter) {
      if (e.reflectivity == 0.0) {
        e = OpticalElement::mode_swap(e.mode_a, e.mode_b);
      } else if (e.reflectivity == 1.0) {
        e = OpticalElement::phase_shifter(e.mode_b, kPi);
      }
    }
    if (e.kind == ElementKind::kModeSwap && !out.empty()) {
      const auto& last = out.back();
      if (last.kind == ElementKind::kModeSwap &&
          ((last.mode_a == e.mode_a && last.mode_b == e.mode_b) ||
           (last.mode_a == e.mode_b && last.mode_b == e.mode_a))) {
        out.pop_back();
        continue;
      }
    }
    if (e.kind != ElementKind::kPhaseShifter) {
      out.push_back(e);
      continue;
    }
    // A shifter after swap(a, b) on mode a equals one on mode b before it.
    int mode = e.mode_a;
    bool merged = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      OpticalElement& o = out[j];
      if (!o.touches(mode)) continue;
      if (o.kind == ElementKind::kModeSwap) {
        mode = o.mode_a == mode ? o.mode_b : o.mode_a;
        continue;
      }
      if (o.kind == ElementKind::kPhaseShifter) {
        o.phase = wrap_phase(o.phase + e.phase);
        if (std::abs(o.phase) < kZeroPhase) out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
      break;
    }
    if (!merged && std::abs(e.phase) >= kZeroPhase) out.push_back(e);
  }
  net.elements = std::move(out);
  return net;
}

OpticalNetlist adjoint(const OpticalNetlist& net) {
  OpticalNetlist out{net.num_modes, {}, net.label.empty() ? "" : net.label + "^dag"};
  for (auto it = net.elements.rbegin(); it != net.elements.rend(); ++it) out.append(it->inverse());
  return out;
}

void embed(OpticalNetlist& target, const OpticalNetlist& sub, std::span<const int> modes) {
  if (static_cast<int>(modes.size()) < sub.num_modes) throw std::invalid_argument("embed: too few target modes");
  for (OpticalElement e : sub.elements) {
    e.mode_a = modes[e.mode_a];
    if (e.mode_b >= 0) e.mode_b = modes[e.mode_b];
    target.append(e);
  }
}

std::vector<OpticalElement> permutation_to_swaps(const Matrix& perm) {
  const int n = static_cast<int>(perm.rows());
  std::vector<int> source(n, -1);  // output row r takes input source[r]
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (std::abs(perm(r, c) - Complex(1.0)) < 1e-12) source[r] = c;
    }
    if (source[r] < 0) throw std::invalid_argument("permutation_to_swaps: not a permutation matrix");
  }
  std::vector<int> content(n);
  for (int r = 0; r < n; ++r) content[r] = r;
  std::vector<OpticalElement> swaps;
  for (int r = 0; r < n; ++r) {
    if (content[r] == source[r]) continue;
    const int s = static_cast<int>(std::find(content.begin(), content.end(), source[r]) - content.begin());
    swaps.push_back(OpticalElement::mode_swap(r, s));
    std::swap(content[r], content[s]);
  }
  return swaps;
}

OpticalNetlist reck_decompose(const UnitaryMatrix& u) {
  const int n = u.dim();
  const UnitarityReport ur = check_unitary(u.matrix(), 1e-10);
  if (!ur.ok) throw std::invalid_argument("reck_decompose: unitarity defect " + std::to_string(ur.defect));
  // Null U^dag to a diagonal D with two-mode transforms L = B(eps) Phi(phi):
  // L_K ... L_1 U^dag = D, hence U = D^dag L_K ... L_1.
  Matrix m = u.matrix().adjoint();
  OpticalNetlist net{n, {}, "reck"};
  for (int c = 0; c + 1 < n; ++c) {
    for (int k = n - 1; k > c; --k) {
      const Complex a = m(k - 1, c), b = m(k, c);
      if (std::abs(b) < 1e-15) continue;
      double eps = 0.0, phi = 0.0;
      if (std::abs(a) > 0.0) {
        eps = std::norm(a) / (std::norm(a) + std::norm(b));
        phi = wrap_phase(std::arg(b) - std::arg(a));
      }
      if (std::abs(phi) >= kZeroPhase) {
        net.append(OpticalElement::phase_shifter(k - 1, phi));
        m.row(k - 1) *= cis(phi);
      }
      const OpticalElement bs = OpticalElement::beam_splitter(k - 1, k, eps);
      net.append(bs);
      apply_rows(m, k - 1, k, bs.local_matrix());
      m(k, c) = 0.0;
    }
  }
  // Trailing shifters apply D^dag relative to its first entry.
  const double ref = std::arg(m(0, 0));
  for (int k = 1; k < n; ++k) {
    const double phase = wrap_phase(ref - std::arg(m(k, k)));
    if (std::abs(phase) >= kZeroPhase) net.append(OpticalElement::phase_shifter(k, phase));
  }
  return net;
}

std::vector<OpticalElement> rotation_to_elements(double alpha, int mode_a, int mode_b) {
  const double a = wrap_phase(alpha);
  const double c = std::cos(a), s = std::sin(a);
  double eps = c * c;
  if (std::abs(c) < 1e-15) eps = 0.0;
  if (std::abs(s) < 1e-15) eps = 1.0;
  const auto bs = OpticalElement::beam_splitter(mode_a, mode_b, eps);
  // B(eps) diag(1,-1) is the rotation for a in [0, pi/2]; the other quadrants
  // move the pi shift to the output side or onto the first mode.
  if (a >= 0.0 && a <= kPi / 2) return {OpticalElement::phase_shifter(mode_b, kPi), bs};
  if (a < 0.0 && a >= -kPi / 2) return {bs, OpticalElement::phase_shifter(mode_b, kPi)};
  if (a > kPi / 2) return {bs, OpticalElement::phase_shifter(mode_a, kPi)};
  return {OpticalElement::phase_shifter(mode_a, kPi), bs};
}

Eigen::Matrix3d rotation_r1(double x) {
  Eigen::Matrix3d r;
  r << 1, 0, 0, 0, std::cos(x), -std::sin(x), 0, std::sin(x), std::cos(x);
  return r;
}

Eigen::Matrix3d rotation_r2(double y) {
  Eigen::Matrix3d r;
  r << std::cos(y), 0, -std::sin(y), 0, 1, 0, std::sin(y), 0, std::cos(y);
  return r;
}

Eigen::Matrix3d rotation_r3(double z) {
  Eigen::Matrix3d r;
  r << std::cos(z), -std::sin(z), 0, std::sin(z), std::cos(z), 0, 0, 0, 1;
  return r;
}

Eigen::Matrix3d euler_rotation(const EulerAngles& a) {
  return rotation_r1(a.x) * rotation_r2(a.y) * rotation_r3(a.z);
}

EulerAngles euler_decompose(const Eigen::Matrix3d& r, bool negative_cos_y) {
  // Row 1 of R1 R2 R3 is (cy cz, -cy sz, -sy); column 3 is (-sy, -sx cy, cx cy).
  const double sy = std::clamp(-r(0, 2), -1.0, 1.0);
  double cy = std::sqrt(std::max(0.0, 1.0 - sy * sy));
  if (negative_cos_y) cy = -cy;
  EulerAngles a;
  a.y = std::atan2(sy, cy);
  if (std::abs(cy) > 1e-12) {
    a.z = std::atan2(-r(0, 1) / cy, r(0, 0) / cy);
    a.x = std::atan2(-r(1, 2) / cy, r(2, 2) / cy);
  } else {
    // Gimbal lock: fix x = 0; row 2 of R is then (sin z, cos z, 0).
    a.x = 0.0;
    a.z = std::atan2(r(1, 0), r(1, 1));
  }
  return a;
}

std::array<Matrix, 7> qubit_factors() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  std::array<Matrix, 7> f;
  for (auto& m : f) m = Matrix::Identity(4, 4);
  f[0] << 1, 0, 1, 0,
          0, 1, 0, 1,
          1, 0, -1, 0,
          0, 1, 0, -1;
  f[0] /= s2;
  f[1](1, 1) = f[1](2, 2) = 1.0 / s3;
  f[1](1, 2) = s2 / s3;
  f[1](2, 1) = -s2 / s3;
  f[2] << 1, 0, 0, 0,
          0, 0, 1, 0,
          0, 1, 0, 0,
          0, 0, 0, 1;
  f[3](2, 2) = cis(kPi / 3);
  f[3](3, 3) = cis(-kPi / 6);
  f[4](2, 2) = -1.0;
  f[5](2, 2) = f[5](2, 3) = f[5](3, 2) = 1.0 / s2;
  f[5](3, 3) = -1.0 / s2;
  f[6](3, 3) = cis(-2.0 * kPi / 3);
  return f;
}

OpticalNetlist qubit_sic_netlist() {
  using E = OpticalElement;
  OpticalNetlist net{4, {}, "qubit-sic"};
  // U1^dag = U1: equal splitters on modes (1,3) and (2,4).
  net.append(E::beam_splitter(0, 2, 0.5));
  net.append(E::beam_splitter(1, 3, 0.5));
  // U3 U2^dag is exactly the splitter with eps = 2/3 on (2,3); the U3 swap
  // absorbs the sign of U2.
  net.append(E::beam_splitter(1, 2, 2.0 / 3.0));
  // U4^dag, U5^dag.
  net.append(E::phase_shifter(2, -kPi / 3));
  net.append(E::phase_shifter(3, kPi / 6));
  net.append(E::phase_shifter(2, kPi));
  // U6^dag = U6.
  net.append(E::beam_splitter(2, 3, 0.5));
  // U7^dag.
  net.append(E::phase_shifter(3, 2.0 * kPi / 3));
  return simplify(std::move(net));
}

Eigen::Matrix3d qutrit_rotation() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  Eigen::Matrix3d r;
  r << 0, s2, 2, s3, s2, -1, -s3, s2, -1;
  return r / std::sqrt(6.0);
}

std::array<Matrix, 3> qutrit_phase_diagonals() {
  std::array<Matrix, 3> d;
  for (int k = 0; k < 3; ++k) {
    d[k] = Matrix::Identity(3, 3);
    d[k](0, 0) = Complex(0.0, -1.0);
  }
  d[1](2, 2) = omega();
  d[2](2, 2) = omega() * omega();
  return d;
}

std::array<Matrix, 3> qutrit_row_permutations() {
  std::array<Matrix, 3> g;
  for (auto& m : g) m = Matrix::Zero(3, 3);
  g[0] = Matrix::Identity(3, 3);
  g[1](0, 2) = g[1](1, 0) = g[1](2, 1) = 1.0;
  g[2](0, 1) = g[2](1, 2) = g[2](2, 0) = 1.0;
  return g;
}

OpticalNetlist q_dagger_netlist(int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("q_dagger_netlist: k must be 1, 2 or 3");
  OpticalNetlist net{3, {}, "Q" + std::to_string(k) + "^dag"};
  // D_k, then R = R1(x) R2(y) R3(z) applied right to left, then G_k.
  net.append(OpticalElement::phase_shifter(0, -kPi / 2));
  if (k == 2) net.append(OpticalElement::phase_shifter(2, 2.0 * kPi / 3));
  if (k == 3) net.append(OpticalElement::phase_shifter(2, 4.0 * kPi / 3));
  const EulerAngles a = euler_decompose(qutrit_rotation(), /*negative_cos_y=*/true);
  net.append(rotation_to_elements(a.z, 0, 1));
  net.append(rotation_to_elements(a.y, 0, 2));
  net.append(rotation_to_elements(a.x, 1, 2));
  net.append(permutation_to_swaps(qutrit_row_permutations()[k - 1]));
  return simplify(std::move(net));
}

OpticalNetlist fourier_netlist() {
  OpticalNetlist net{3, {}, "P"};
  // (1/sqrt2)[[1,-1,0],[0,0,sqrt2],[1,1,0]] = swap(2,3) swap(1,2) B(1/2) on (1,2).
  net.append(OpticalElement::beam_splitter(0, 1, 0.5));
  net.append(OpticalElement::mode_swap(0, 1));
  net.append(OpticalElement::mode_swap(1, 2));
  net.append(q_dagger_netlist(1).elements);
  return simplify(std::move(net));
}

OpticalNetlist qutrit_sic_netlist() {
  OpticalNetlist net{9, {}, "qutrit-sic"};
  const OpticalNetlist p = fourier_netlist();
  const OpticalNetlist p_dag = adjoint(p);
  for (int b = 0; b < 3; ++b) {
    const std::array<int, 3> modes{b, b + 3, b + 6};
    embed(net, p, modes);
  }
  for (int k = 0; k < 3; ++k) {
    const std::array<int, 3> modes{3 * k, 3 * k + 1, 3 * k + 2};
    embed(net, q_dagger_netlist(k + 1), modes);
  }
  for (int b = 0; b < 3; ++b) {
    const std::array<int, 3> modes{b, b + 3, b + 6};
    embed(net, p_dag, modes);
  }
  return simplify(std::move(net));
}

RecompositionReport verify_netlist(const OpticalNetlist& net, const Matrix& target, double tol,
                                   bool up_to_global_phase) {
  if (target.rows() != net.num_modes || target.cols() != net.num_modes) {
    throw std::invalid_argument("verify_netlist: target dimension does not match netlist modes");
  }
  const Matrix m = recompose(net).matrix();
  RecompositionReport r;
  r.distance = up_to_global_phase ? global_phase_distance(m, target) : (m - target).norm();
  r.ok = r.distance <= tol;
  return r;
}

Json netlist_to_json(const OpticalNetlist& net) {
  Json elements = Json::array();
  for (const auto& e : net.elements) {
    switch (e.kind) {
      case ElementKind::kBeamSplitter:
        elements.push_back({{"kind", "bs"}, {"modes", {e.mode_a + 1, e.mode_b + 1}}, {"eps", e.reflectivity}});
        break;
      case ElementKind::kPhaseShifter:
        elements.push_back({{"kind", "ps"}, {"mode", e.mode_a + 1}, {"phase", e.phase}});
        break;
      case ElementKind::kModeSwap:
        elements.push_back({{"kind", "swap"}, {"modes", {e.mode_a + 1, e.mode_b + 1}}});
        break;
    }
  }
  Json j{{"modes", net.num_modes}, {"elements", elements}};
  if (!net.label.empty()) j["label"] = net.label;
  return j;
}

OpticalNetlist netlist_from_json(const Json& j) {
  OpticalNetlist net;
  net.num_modes = j.at("modes").get<int>();
  if (j.contains("label")) net.label = j.at("label").get<std::string>();
  for (const auto& e : j.at("elements")) {
    const auto kind = e.at("kind").get<std::string>();
    OpticalElement el;
    if (kind == "ps") {
      el.kind = ElementKind::kPhaseShifter;
      el.mode_a = e.at("mode").get<int>() - 1;
      el.phase = e.at("phase").get<double>();
    } else if (kind == "bs" || kind == "swap") {
      const auto modes = e.at("modes").get<std::vector<int>>();
      if (modes.size() != 2) throw std::invalid_argument("netlist JSON: two-mode element needs 2 modes");
      el.kind = kind == "bs" ? ElementKind::kBeamSplitter : ElementKind::kModeSwap;
      el.mode_a = modes[0] - 1;
      el.mode_b = modes[1] - 1;
      if (kind == "bs") el.reflectivity = e.at("eps").get<double>();
    } else {
      throw std::invalid_argument("netlist JSON: unknown element kind '" + kind + "'");
    }
    net.elements.push_back(el);
  }
  return net;
}

}  // namespace sicmp
