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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/random/binomial_distribution.hpp>

#include "sicmp/rng.h"

namespace sicmp {

std::string device_label(Device d) { return d == Device::kQubitSic ? "qubit-sic" : "qutrit-sic"; }

Device parse_device(const std::string& label) {
  if (label == "qubit-sic" || label == "qubit") return Device::kQubitSic;
  if (label == "qutrit-sic" || label == "qutrit") return Device::kQutritSic;
  throw std::invalid_argument("unknown device '" + label + "' (expected qubit-sic or qutrit-sic)");
}

int device_dim(Device d) { return d == Device::kQubitSic ? 2 : 3; }

SicDevice build_device(Device d) {
  if (d == Device::kQubitSic) return {d, qubit_sic(), qubit_naimark_unitary(), qubit_sic_netlist()};
  return {d, qutrit_sic(), qutrit_naimark_unitary(), qutrit_sic_netlist()};
}

RealVector DetectionRecord::frequencies() const {
  RealVector f(static_cast<Eigen::Index>(counts.size()));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    f(static_cast<Eigen::Index>(i)) = static_cast<double>(counts[i]) / static_cast<double>(shots);
  }
  return f;
}

Vector propagate(const OpticalNetlist& net, const Vector& input) {
  if (input.size() != net.num_modes) throw std::invalid_argument("propagate: input length != netlist modes");
  return recompose(net).matrix() * input;
}

OutcomeDistribution detector_distribution(const DensityOperator& state, const SicPovm& povm) {
  if (state.dim() != povm.dim) throw std::invalid_argument("detector_distribution: dimension mismatch");
  RealVector p(povm.num_outcomes());
  for (int i = 0; i < povm.num_outcomes(); ++i) p(i) = born_probability(state, povm.effects[i]);
  return OutcomeDistribution::from_probs(std::move(p), 1e-10);
}

DetectionRecord sample_counts(const OutcomeDistribution& dist, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_counts: shots must be positive");
  SplitMix64 rng(seed);
  DetectionRecord rec;
  rec.shots = shots;
  rec.seed = seed;
  rec.rng = std::string(SplitMix64::kAlgorithmId);
  rec.counts.assign(dist.size(), 0);
  std::int64_t remaining = shots;
  double mass = 1.0;
  for (int i = 0; i < dist.size() && remaining > 0; ++i) {
    if (i == dist.size() - 1) {
      rec.counts[i] = remaining;
      break;
    }
    const double p = mass > 0.0 ? std::clamp(dist[i] / mass, 0.0, 1.0) : 0.0;
    std::int64_t k = 0;
    if (p >= 1.0) {
      k = remaining;
    } else if (p > 0.0) {
      boost::random::binomial_distribution<std::int64_t, double> bin(remaining, p);
      k = bin(rng);
    }
    rec.counts[i] = k;
    remaining -= k;
    mass -= dist[i];
  }
  return rec;
}

RealVector circuit_distribution(const PureState& phi, const SicDevice& device) {
  const Vector out = propagate(device.netlist, embed_state(phi, device.extension));
  return out.cwiseAbs2();
}

ExperimentResult run_sic_experiment(const DensityOperator& state, const SicDevice& device,
                                    std::int64_t shots, std::uint64_t seed) {
  if (state.dim() != device.povm.dim) throw std::invalid_argument("run_sic_experiment: dimension mismatch");
  if (shots < 1) throw std::invalid_argument("run_sic_experiment: shots must be positive");
  const OutcomeDistribution born = detector_distribution(state, device.povm);
  std::optional<double> deviation;
  RealVector probs = born.probs();
  if (purity_traces(state).tr_rho2 > 1.0 - 1e-12) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(state.matrix());
    const PureState phi = PureState::normalized(es.eigenvectors().col(state.dim() - 1));
    probs = circuit_distribution(phi, device);
    deviation = (probs - born.probs()).cwiseAbs().maxCoeff();
  }
  OutcomeDistribution ideal = OutcomeDistribution::from_probs(probs, 1e-10);
  DetectionRecord rec = sample_counts(ideal, shots, seed);
  rec.device_label = device_label(device.device);
  return {std::move(rec), std::move(ideal), deviation};
}

ExperimentResult run_sic_experiment(const DensityOperator& state, Device device, std::int64_t shots,
                                    std::uint64_t seed) {
  return run_sic_experiment(state, build_device(device), shots, seed);
}

Json record_to_json(const DetectionRecord& r, const std::optional<OutcomeDistribution>& ideal) {
  Json j{{"device", r.device_label}, {"counts", r.counts}, {"shots", r.shots},
         {"seed", r.seed},           {"rng", r.rng}};
  if (ideal) j["ideal"] = real_vector_to_json(ideal->probs());
  return j;
}

DetectionRecord record_from_json(const Json& j) {
  DetectionRecord r;
  r.counts = j.at("counts").get<std::vector<std::int64_t>>();
  r.shots = j.at("shots").get<std::int64_t>();
  r.seed = j.value("seed", std::uint64_t{0});
  r.rng = j.value("rng", std::string("splitmix64"));
  r.device_label = j.value("device", std::string());
  std::int64_t total = 0;
  for (auto c : r.counts) {
    if (c < 0) throw std::invalid_argument("record JSON: negative count");
    total += c;
  }
  if (r.shots < 1 || total != r.shots) throw std::invalid_argument("record JSON: counts do not sum to shots");
  return r;
}

}  // namespace sicmp
