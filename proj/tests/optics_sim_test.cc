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

#include "sicmp/optics_sim.h"

#include <cmath>

#include "gtest/gtest.h"
#include "sicmp/multiport.h"
#include "sicmp/naimark.h"
#include "sicmp/rng.h"

using namespace sicmp;

namespace {

OutcomeDistribution dist(std::initializer_list<double> p) {
  RealVector v(static_cast<Eigen::Index>(p.size()));
  int i = 0;
  for (double x : p) v(i++) = x;
  return OutcomeDistribution::from_probs(v);
}

}  // namespace

TEST(optics_sim, device_labels) {
  ASSERT_EQ(parse_device("qubit-sic"), Device::kQubitSic);
  ASSERT_EQ(parse_device("qutrit-sic"), Device::kQutritSic);
  ASSERT_EQ(device_label(Device::kQutritSic), "qutrit-sic");
  ASSERT_EQ(device_dim(Device::kQutritSic), 3);
  ASSERT_THROW(parse_device("ququart-sic"), std::invalid_argument);
}

TEST(optics_sim, propagate) {
  Vector in(2);
  in << 1.0, 0.0;
  ASSERT_EQ(propagate(OpticalNetlist{2, {}, ""}, in), in);
  OpticalNetlist net{2, {OpticalElement::phase_shifter(0, kPi)}, ""};
  ASSERT_TRUE((propagate(net, in) + in).isZero(1e-15));
  ASSERT_THROW(propagate(net, Vector::Zero(3)), std::invalid_argument);
}

TEST(optics_sim, detector_distribution_examples) {
  const SicPovm q3 = qutrit_sic();
  const auto uniform = detector_distribution(DensityOperator::maximally_mixed(3), q3);
  for (int i = 0; i < 9; ++i) ASSERT_NEAR(uniform[i], 1.0 / 9, 1e-14);

  const auto fid = detector_distribution(DensityOperator::from_pure(qutrit_fiducial()), q3);
  ASSERT_NEAR(fid[0], 1.0 / 3, 1e-14);
  for (int i = 1; i < 9; ++i) ASSERT_NEAR(fid[i], 1.0 / 12, 1e-14);

  const auto zero = detector_distribution(DensityOperator::from_pure(PureState::from_amplitudes(Vector::Unit(2, 0))),
                                          qubit_sic());
  const double expected[] = {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  for (int i = 0; i < 4; ++i) ASSERT_NEAR(zero[i], expected[i], 1e-14);

  ASSERT_THROW(detector_distribution(DensityOperator::maximally_mixed(2), q3), std::invalid_argument);
}

TEST(optics_sim, sample_counts_degenerate) {
  const DetectionRecord r = sample_counts(dist({1.0, 0.0, 0.0, 0.0}), 12345, 3);
  ASSERT_EQ(r.counts, (std::vector<std::int64_t>{12345, 0, 0, 0}));
  const DetectionRecord last = sample_counts(dist({0.0, 0.0, 0.0, 1.0}), 50, 3);
  ASSERT_EQ(last.counts, (std::vector<std::int64_t>{0, 0, 0, 50}));
  ASSERT_THROW(sample_counts(dist({1.0}), 0, 1), std::invalid_argument);
}

TEST(optics_sim, sample_counts_deterministic) {
  const auto d = dist({0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6});
  const DetectionRecord a = sample_counts(d, 100000, 77);
  const DetectionRecord b = sample_counts(d, 100000, 77);
  ASSERT_EQ(a.counts, b.counts);
  ASSERT_EQ(a.seed, 77u);
  ASSERT_EQ(a.rng, "splitmix64");
  ASSERT_NE(a.counts, sample_counts(d, 100000, 78).counts);
}

TEST(optics_sim, sample_counts_concentrate) {
  const double p[] = {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  const auto d = dist({p[0], p[1], p[2], p[3]});
  const std::int64_t shots = 1000000;
  int within = 0, total = 0;
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  for (int s = 0; s < 100; ++s) {
    const DetectionRecord r = sample_counts(d, shots, SplitMix64::at(2024, s));
    std::int64_t sum = 0;
    for (int i = 0; i < 4; ++i) {
      sum += r.counts[i];
      const double f = static_cast<double>(r.counts[i]) / shots;
      mean(i) += f / 100;
      within += std::abs(f - p[i]) <= 3 * std::sqrt(p[i] * (1 - p[i]) / shots);
      ++total;
    }
    ASSERT_EQ(sum, shots);
  }
  ASSERT_GE(within, 0.99 * total);
  // The 100-seed mean is 10x tighter.
  for (int i = 0; i < 4; ++i) ASSERT_NEAR(mean(i), p[i], 4 * std::sqrt(p[i] * (1 - p[i]) / (100.0 * shots)));
}

TEST(optics_sim, circuit_matches_born_rule) {
  const SicDevice q3 = build_device(Device::kQutritSic);
  const ExperimentResult r = run_sic_experiment(DensityOperator::from_pure(qutrit_fiducial()), q3, 1000, 1);
  ASSERT_TRUE(r.path_deviation.has_value());
  ASSERT_LT(*r.path_deviation, 1e-10);
  for (int s = 0; s < 50; ++s) {
    for (Device dev : {Device::kQubitSic, Device::kQutritSic}) {
      const SicDevice d = build_device(dev);
      const PureState phi = random_pure_state(d.povm.dim, 3000 + s);
      const RealVector circuit = circuit_distribution(phi, d);
      const auto born = detector_distribution(DensityOperator::from_pure(phi), d.povm);
      ASSERT_LT((circuit - born.probs()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(optics_sim, mixed_input_uses_effects) {
  const ExperimentResult r = run_sic_experiment(DensityOperator::maximally_mixed(2), Device::kQubitSic, 1000, 5);
  ASSERT_FALSE(r.path_deviation.has_value());
  for (int i = 0; i < 4; ++i) ASSERT_NEAR(r.ideal[i], 0.25, 1e-14);
  ASSERT_EQ(r.record.device_label, "qubit-sic");
}

TEST(optics_sim, qubit_zero_state_counts) {
  const ExperimentResult r = run_sic_experiment(
      DensityOperator::from_pure(PureState::from_amplitudes(Vector::Unit(2, 0))), Device::kQubitSic, 600000, 11);
  const double expected[] = {300000, 100000, 100000, 100000};
  for (int i = 0; i < 4; ++i) {
    const double p = expected[i] / 600000;
    ASSERT_NEAR(static_cast<double>(r.record.counts[i]), expected[i], 5 * std::sqrt(600000 * p * (1 - p)));
  }
}

TEST(optics_sim, run_rejects_bad_input) {
  ASSERT_THROW(run_sic_experiment(DensityOperator::maximally_mixed(2), Device::kQutritSic, 10, 1),
               std::invalid_argument);
  ASSERT_THROW(run_sic_experiment(DensityOperator::maximally_mixed(3), Device::kQutritSic, 0, 1),
               std::invalid_argument);
}

TEST(optics_sim, record_json_round_trip) {
  const ExperimentResult r = run_sic_experiment(DensityOperator::maximally_mixed(3), Device::kQutritSic, 999, 8);
  const Json j = record_to_json(r.record, r.ideal);
  ASSERT_TRUE(j.contains("ideal"));
  const DetectionRecord back = record_from_json(Json::parse(j.dump()));
  ASSERT_EQ(back.counts, r.record.counts);
  ASSERT_EQ(back.shots, 999);
  ASSERT_EQ(back.device_label, "qutrit-sic");

  Json bad = j;
  bad["shots"] = 1000;
  ASSERT_THROW(record_from_json(bad), std::invalid_argument);
  bad = j;
  bad["counts"][0] = -1;
  ASSERT_THROW(record_from_json(bad), std::invalid_argument);
}
