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

#include <cmath>

#include "gtest/gtest.h"
#include "sicmp/naimark.h"
#include "sicmp/rng.h"
#include "sicmp/sic.h"
#include "test_util.h"

using namespace sicmp;
using sicmp::testing::haar_unitary;

namespace {

Matrix printed_q(int k) {
  const Complex w = omega(), w2 = omega() * omega();
  const double r2 = std::sqrt(2.0);
  Matrix q(3, 3);
  if (k == 1) q << 0.0, w - w2, w2 - w, r2, r2, r2, 2.0, -1.0, -1.0;
  if (k == 2) q << w2 - w, 0.0, w - w2, r2, r2, r2, -w2, 2.0 * w2, -w2;
  if (k == 3) q << w - w2, w2 - w, 0.0, r2, r2, r2, -w, -w, 2.0 * w;
  return q / std::sqrt(6.0);
}

Matrix rotation2(double a) {
  Matrix m(2, 2);
  m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  return m;
}

OpticalNetlist random_netlist(int modes, int length, std::uint64_t seed) {
  SplitMix64 rng(seed);
  OpticalNetlist net{modes, {}, "random"};
  for (int i = 0; i < length; ++i) {
    const int a = static_cast<int>(rng() % modes);
    int b = static_cast<int>(rng() % (modes - 1));
    if (b >= a) ++b;
    switch (rng() % 4) {
      case 0: net.append(OpticalElement::beam_splitter(a, b, rng.uniform())); break;
      case 1: net.append(OpticalElement::mode_swap(a, b)); break;
      case 2: net.append(OpticalElement::beam_splitter(a, b, (rng() % 2) ? 0.0 : 1.0)); break;
      default: net.append(OpticalElement::phase_shifter(a, 2 * kPi * rng.uniform() - kPi)); break;
    }
  }
  return net;
}

}  // namespace

TEST(multiport, empty_netlist_is_identity) {
  ASSERT_TRUE(recompose(OpticalNetlist{4, {}, ""}).matrix().isIdentity(0.0));
}

TEST(multiport, balanced_beam_splitter) {
  OpticalNetlist net{2, {OpticalElement::beam_splitter(0, 1, 0.5)}, ""};
  Matrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  ASSERT_TRUE((recompose(net).matrix() - h / std::sqrt(2.0)).isZero(1e-15));
}

TEST(multiport, elements_apply_in_order) {
  OpticalNetlist net{2, {}, ""};
  net.append(OpticalElement::phase_shifter(0, kPi / 2));
  net.append(OpticalElement::mode_swap(0, 1));
  const Matrix u = recompose(net).matrix();
  // e_0 picks up the phase, then moves to mode 1.
  ASSERT_NEAR(std::abs(u(1, 0) - Complex(0, 1)), 0.0, 1e-15);
  ASSERT_NEAR(std::abs(u(0, 1) - 1.0), 0.0, 1e-15);
}

TEST(multiport, check_netlist_reports_defects) {
  OpticalNetlist net{4, {OpticalElement::beam_splitter(0, 1, 0.5)}, ""};
  ASSERT_TRUE(check_netlist(net).empty());
  net.elements[0].reflectivity = 1.5;
  auto issues = check_netlist(net);
  ASSERT_EQ(issues.size(), 1u);
  ASSERT_NE(issues[0].find("reflectivity"), std::string::npos);
  ASSERT_THROW(recompose(net), std::invalid_argument);

  net.elements = {OpticalElement::beam_splitter(0, 4, 0.5)};
  ASSERT_FALSE(check_netlist(net).empty());
  net.elements = {OpticalElement::beam_splitter(2, 2, 0.5)};
  ASSERT_FALSE(check_netlist(net).empty());
  net.elements = {OpticalElement::phase_shifter(0, std::nan(""))};
  ASSERT_FALSE(check_netlist(net).empty());
}

TEST(multiport, tally_excludes_swaps) {
  OpticalNetlist net{3, {}, ""};
  net.append(OpticalElement::beam_splitter(0, 1, 0.3));
  net.append(OpticalElement::mode_swap(1, 2));
  net.append(OpticalElement::phase_shifter(2, 0.4));
  const ElementTally t = tally(net);
  ASSERT_EQ(t.beam_splitters, 1);
  ASSERT_EQ(t.phase_shifters, 1);
  ASSERT_EQ(t.swaps, 1);
  ASSERT_EQ(element_count(net), 2);
}

TEST(multiport, wrap_phase) {
  ASSERT_NEAR(wrap_phase(3 * kPi), kPi, 1e-12);
  ASSERT_NEAR(wrap_phase(-kPi), kPi, 1e-12);
  ASSERT_NEAR(wrap_phase(2 * kPi / 3 + 4 * kPi), 2 * kPi / 3, 1e-12);
  ASSERT_NEAR(wrap_phase(-0.25), -0.25, 1e-15);
}

TEST(multiport, simplify_preserves_unitary) {
  for (int s = 0; s < 50; ++s) {
    const OpticalNetlist net = random_netlist(5, 30, 900 + s);
    const OpticalNetlist simple = simplify(net);
    ASSERT_LE(simple.elements.size(), net.elements.size());
    ASSERT_TRUE((recompose(simple).matrix() - recompose(net).matrix()).isZero(1e-12)) << "seed " << s;
  }
}

TEST(multiport, simplify_rewrites_degenerate_beam_splitters) {
  OpticalNetlist net{2, {OpticalElement::beam_splitter(0, 1, 0.0)}, ""};
  OpticalNetlist simple = simplify(net);
  ASSERT_EQ(simple.elements.size(), 1u);
  ASSERT_EQ(simple.elements[0].kind, ElementKind::kModeSwap);

  net.elements = {OpticalElement::beam_splitter(0, 1, 1.0), OpticalElement::phase_shifter(1, kPi)};
  ASSERT_TRUE(simplify(net).elements.empty());

  net.elements = {OpticalElement::phase_shifter(0, 0.3), OpticalElement::mode_swap(0, 1),
                  OpticalElement::phase_shifter(1, 0.2)};
  simple = simplify(net);
  ASSERT_EQ(element_count(simple), 1);
  ASSERT_NEAR(simple.elements[0].phase, 0.5, 1e-15);
}

TEST(multiport, adjoint_inverts) {
  for (int s = 0; s < 10; ++s) {
    const OpticalNetlist net = random_netlist(4, 20, 70 + s);
    ASSERT_TRUE((recompose(adjoint(net)).matrix() - recompose(net).matrix().adjoint()).isZero(1e-13));
  }
}

TEST(multiport, permutation_to_swaps) {
  for (const Matrix& g : qutrit_row_permutations()) {
    OpticalNetlist net{3, permutation_to_swaps(g), ""};
    ASSERT_TRUE((recompose(net).matrix() - g).isZero(0.0));
  }
}

TEST(multiport, rotation_elements_examples) {
  auto check = [](double a, double eps) {
    const auto es = rotation_to_elements(a, 0, 1);
    ASSERT_EQ(es.size(), 2u);
    double found = -1.0;
    for (const auto& e : es)
      if (e.kind == ElementKind::kBeamSplitter) found = e.reflectivity;
    ASSERT_NEAR(found, eps, 1e-15);
    OpticalNetlist net{2, es, ""};
    ASSERT_TRUE((recompose(net).matrix() - rotation2(a)).isZero(1e-15)) << a;
  };
  check(0.0, 1.0);
  check(kPi / 2, 0.0);
  check(kPi / 4, 0.5);
  Matrix m(2, 2);
  m << 1.0, -1.0, 1.0, 1.0;
  ASSERT_TRUE((rotation2(kPi / 4) - m / std::sqrt(2.0)).isZero(1e-15));
}

TEST(multiport, rotation_elements_all_quadrants) {
  for (int k = -48; k <= 48; ++k) {
    const double a = k * kPi / 48 + 0.001 * (k % 3);
    OpticalNetlist net{2, rotation_to_elements(a, 0, 1), ""};
    ASSERT_TRUE(check_netlist(net).empty());
    ASSERT_TRUE((recompose(net).matrix() - rotation2(a)).isZero(1e-14)) << a;
  }
}

TEST(multiport, euler_angles_of_qutrit_rotation) {
  const Eigen::Matrix3d r = qutrit_rotation();
  const EulerAngles a = euler_decompose(r, true);
  ASSERT_NEAR(a.x, -kPi / 4, 1e-14);
  ASSERT_NEAR(a.y, -std::acos(-1.0 / std::sqrt(3.0)), 1e-14);
  ASSERT_NEAR(a.z, kPi / 2, 1e-14);
  ASSERT_TRUE((euler_rotation(euler_decompose(r, false)) - r).isZero(1e-14));
}

TEST(multiport, euler_decompose_random_rotations) {
  for (int s = 0; s < 50; ++s) {
    SplitMix64 rng(s);
    const EulerAngles a{2 * kPi * rng.uniform() - kPi, kPi * rng.uniform() - kPi / 2, 2 * kPi * rng.uniform() - kPi};
    const Eigen::Matrix3d r = euler_rotation(a);
    for (bool branch : {false, true}) ASSERT_TRUE((euler_rotation(euler_decompose(r, branch)) - r).isZero(1e-12));
  }
}

TEST(multiport, qubit_factors_multiply_to_naimark_unitary) {
  const auto f = qubit_factors();
  Matrix prod = Matrix::Identity(4, 4);
  for (const auto& m : f) prod *= m;
  ASSERT_TRUE((prod - qubit_naimark_unitary().completion.matrix()).isZero(1e-14));
  ASSERT_NEAR(std::abs(f[3](2, 2) - cis(kPi / 3)), 0.0, 1e-15);
  ASSERT_NEAR(std::abs(f[3](3, 3) - cis(-kPi / 6)), 0.0, 1e-15);
}

TEST(multiport, qubit_netlist) {
  const OpticalNetlist net = qubit_sic_netlist();
  ASSERT_EQ(element_count(net), 7);
  const Matrix u_dag = qubit_naimark_unitary().completion.matrix().adjoint();
  ASSERT_TRUE(verify_netlist(net, u_dag, 1e-10, true).ok);
  ASSERT_TRUE(verify_netlist(net, u_dag, 1e-10, false).ok);

  const Vector out = recompose(net).matrix() * embed_state(PureState::from_amplitudes(Vector::Unit(2, 0)), 2);
  const double expected[] = {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  for (int i = 0; i < 4; ++i) ASSERT_NEAR(std::norm(out(i)), expected[i], 1e-12);
}

TEST(multiport, fourier_netlist) {
  const Matrix p = recompose(fourier_netlist()).matrix();
  ASSERT_TRUE((p - fourier_matrix()).isZero(1e-14));
  for (int c = 0; c < 3; ++c) ASSERT_NEAR(std::abs(p(0, c) - 1.0 / std::sqrt(3.0)), 0.0, 1e-14);
  ASSERT_NEAR(std::abs(p(1, 0) - omega() * omega() / std::sqrt(3.0)), 0.0, 1e-14);
  ASSERT_TRUE((p.adjoint() * p).isIdentity(1e-12));
}

TEST(multiport, q_dagger_factorization) {
  const Matrix r = qutrit_rotation().cast<Complex>();
  const auto d = qutrit_phase_diagonals();
  const auto g = qutrit_row_permutations();
  for (int k = 1; k <= 3; ++k) {
    const Matrix qd = printed_q(k).adjoint();
    ASSERT_TRUE((qd - g[k - 1] * r * d[k - 1]).isZero(1e-14)) << k;
    ASSERT_TRUE((recompose(q_dagger_netlist(k)).matrix() - qd).isZero(1e-14)) << k;
  }
  const Eigen::Matrix3d euler =
      rotation_r1(-kPi / 4) * rotation_r2(-std::acos(-1.0 / std::sqrt(3.0))) * rotation_r3(kPi / 2);
  ASSERT_TRUE((euler - qutrit_rotation()).isZero(1e-14));
}

// The row permutations printed next to the factorization carry the labels of
// k = 2 and k = 3 exchanged; only the exchanged assignment reproduces Q_k^dag.
TEST(multiport, printed_row_permutations_are_exchanged) {
  Matrix printed_g2 = Matrix::Zero(3, 3), printed_g3 = Matrix::Zero(3, 3);
  printed_g2(0, 1) = printed_g2(1, 2) = printed_g2(2, 0) = 1.0;
  printed_g3(0, 2) = printed_g3(1, 0) = printed_g3(2, 1) = 1.0;
  const Matrix r = qutrit_rotation().cast<Complex>();
  const auto d = qutrit_phase_diagonals();
  ASSERT_GT((printed_q(2).adjoint() - printed_g2 * r * d[1]).norm(), 1.0);
  ASSERT_GT((printed_q(3).adjoint() - printed_g3 * r * d[2]).norm(), 1.0);
  ASSERT_TRUE((printed_q(2).adjoint() - printed_g3 * r * d[1]).isZero(1e-14));
  ASSERT_TRUE((printed_q(3).adjoint() - printed_g2 * r * d[2]).isZero(1e-14));
}

TEST(multiport, qutrit_netlist) {
  const OpticalNetlist net = qutrit_sic_netlist();
  ASSERT_LE(element_count(net), 44);
  ASSERT_EQ(net.num_modes, 9);
  const Matrix v_dag = qutrit_naimark_unitary().completion.matrix().adjoint();
  ASSERT_TRUE(verify_netlist(net, v_dag, 1e-10, true).ok);

  const Vector out = recompose(net).matrix() * embed_state(qutrit_fiducial(), 3);
  ASSERT_NEAR(std::norm(out(0)), 1.0 / 3, 1e-12);
  for (int i = 1; i < 9; ++i) ASSERT_NEAR(std::norm(out(i)), 1.0 / 12, 1e-12);
}

TEST(multiport, reck_small_cases) {
  for (int s = 0; s < 20; ++s) {
    const Matrix u = haar_unitary(2, 10 + s);
    const OpticalNetlist net = reck_decompose(UnitaryMatrix::from_matrix(u));
    ASSERT_LE(element_count(net), 3);
    ASSERT_TRUE(verify_netlist(net, u, 1e-10, true).ok);
  }
  const OpticalNetlist one = reck_decompose(UnitaryMatrix::identity(1));
  ASSERT_EQ(element_count(one), 0);
}

TEST(multiport, reck_naimark_unitaries) {
  const Matrix u = qubit_naimark_unitary().completion.matrix();
  const OpticalNetlist nu = reck_decompose(UnitaryMatrix::from_matrix(u));
  ASSERT_LE(element_count(nu), 15);
  ASSERT_TRUE(verify_netlist(nu, u, 1e-9, true).ok);
  const Matrix v = qutrit_naimark_unitary().completion.matrix();
  const OpticalNetlist nv = reck_decompose(UnitaryMatrix::from_matrix(v));
  ASSERT_LE(element_count(nv), 80);
  ASSERT_TRUE(verify_netlist(nv, v, 1e-9, true).ok);
}

TEST(multiport, reck_random_unitaries) {
  for (int n : {3, 4, 6, 9}) {
    for (int s = 0; s < 10; ++s) {
      const Matrix u = haar_unitary(n, 1000 * n + s);
      const OpticalNetlist net = reck_decompose(UnitaryMatrix::from_matrix(u));
      ASSERT_TRUE(check_netlist(net).empty());
      ASSERT_LE(element_count(net), n * n - 1);
      ASSERT_LT(global_phase_distance(recompose(net).matrix(), u), 1e-10) << n << " " << s;
    }
  }
}

TEST(multiport, reck_rejects_non_unitary) {
  Matrix m = Matrix::Identity(3, 3);
  m(0, 0) = 2.0;
  ASSERT_THROW(reck_decompose(UnitaryMatrix::from_matrix(m, 10.0)), std::invalid_argument);
}

TEST(multiport, verify_netlist_dimension_mismatch) {
  ASSERT_THROW(verify_netlist(qubit_sic_netlist(), Matrix::Identity(3, 3), 1e-9), std::invalid_argument);
  ASSERT_FALSE(verify_netlist(qubit_sic_netlist(), Matrix::Identity(4, 4), 1e-9).ok);
}

TEST(multiport, json_round_trip_uses_one_based_modes) {
  const OpticalNetlist net = qutrit_sic_netlist();
  const Json j = netlist_to_json(net);
  ASSERT_EQ(j.at("modes").get<int>(), 9);
  for (const auto& e : j.at("elements")) {
    if (e.contains("mode")) {
      ASSERT_GE(e.at("mode").get<int>(), 1);
      ASSERT_LE(e.at("mode").get<int>(), 9);
    }
  }
  const OpticalNetlist back = netlist_from_json(Json::parse(j.dump()));
  ASSERT_EQ(back.elements.size(), net.elements.size());
  ASSERT_TRUE((recompose(back).matrix() - recompose(net).matrix()).isZero(1e-15));
}

TEST(multiport, json_parse_errors) {
  ASSERT_THROW(netlist_from_json(Json::parse(R"({"modes": 2, "elements": [{"kind": "mirror"}]})")),
               std::invalid_argument);
  ASSERT_THROW(netlist_from_json(Json::parse(R"({"modes": 2, "elements": [{"kind": "bs", "modes": [1], "eps": 0.5}]})")),
               std::invalid_argument);
  const OpticalNetlist bad =
      netlist_from_json(Json::parse(R"({"modes": 2, "elements": [{"kind": "bs", "modes": [1, 2], "eps": 1.5}]})"));
  ASSERT_FALSE(check_netlist(bad).empty());
}
