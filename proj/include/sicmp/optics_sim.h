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

#ifndef SICMP_OPTICS_SIM_H
#define SICMP_OPTICS_SIM_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sicmp/json_io.h"
#include "sicmp/multiport.h"
#include "sicmp/naimark.h"
#include "sicmp/qstate.h"
#include "sicmp/sic.h"

namespace sicmp {

enum class Device { kQubitSic, kQutritSic };

std::string device_label(Device d);
/// Accepts "qubit-sic" / "qutrit-sic". Throws std::invalid_argument otherwise.
Device parse_device(const std::string& label);
int device_dim(Device d);

/// Compiled circuit and the POVM it realizes.
struct SicDevice {
  Device device;
  SicPovm povm;
  NaimarkExtension extension;
  OpticalNetlist netlist;
};

SicDevice build_device(Device d);

struct DetectionRecord {
  std::vector<std::int64_t> counts;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  std::string rng = "splitmix64";
  std::string device_label;

  /// Relative frequencies counts / shots.
  RealVector frequencies() const;
};

/// recompose(netlist) * input. Throws on a length mismatch.
Vector propagate(const OpticalNetlist& net, const Vector& input);

/// p(i) = tr(rho E_i).
OutcomeDistribution detector_distribution(const DensityOperator& state, const SicPovm& povm);

/// Multinomial sample via sequential conditional binomials in detector order.
/// Throws if shots < 1.
DetectionRecord sample_counts(const OutcomeDistribution& dist, std::int64_t shots, std::uint64_t seed);

struct ExperimentResult {
  DetectionRecord record;
  OutcomeDistribution ideal;
  /// Max |circuit - Born| over detectors; set only for pure inputs.
  std::optional<double> path_deviation;
};

/// Pure inputs (purity within 1e-12 of 1) are propagated through the compiled
/// circuit and cross-checked against the Born rule; mixed inputs use the
/// effects directly. The record is sampled from the returned ideal distribution.
ExperimentResult run_sic_experiment(const DensityOperator& state, const SicDevice& device,
                                    std::int64_t shots, std::uint64_t seed);
ExperimentResult run_sic_experiment(const DensityOperator& state, Device device, std::int64_t shots,
                                    std::uint64_t seed);

/// Detector probabilities |(netlist . embed(phi))_j|^2.
RealVector circuit_distribution(const PureState& phi, const SicDevice& device);

Json record_to_json(const DetectionRecord& r, const std::optional<OutcomeDistribution>& ideal = std::nullopt);
DetectionRecord record_from_json(const Json& j);

}  // namespace sicmp

#endif  // SICMP_OPTICS_SIM_H
