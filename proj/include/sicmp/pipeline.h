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

#ifndef SICMP_PIPELINE_H
#define SICMP_PIPELINE_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "sicmp/json_io.h"
#include "sicmp/optics_sim.h"
#include "sicmp/qstate.h"
#include "sicmp/tomography.h"

namespace sicmp {

using Tolerances = std::map<std::string, double>;

/// Named tolerance profiles: "strict", "default", "loose". Keys are
/// "sic", "unitarity", "recompose" and "solver".
Tolerances tolerance_profile(const std::string& name);

/// Profile selected by SICMP_TOLERANCE_PROFILE, or "default" when unset.
Tolerances default_tolerances();

/// Error raised by a pipeline stage; `stage()` names the stage.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct RunConfig {
  Device device = Device::kQubitSic;
  std::int64_t shots = 100000;
  std::uint64_t seed = 1;
  Tolerances tolerances = tolerance_profile("default");
  std::string estimate_mode = "pure";
  std::optional<std::filesystem::path> truth_path;
  std::optional<std::filesystem::path> report_path;

  /// Throws StageError("config", ...) for shots < 1, non-positive
  /// tolerances, an unknown mode, or a missing truth file.
  void validate() const;

  /// Overlays the keys present in `j` onto `base`.
  static RunConfig merge_json(RunConfig base, const Json& j);
};

/// Reconstructs a state from a detection record. `mode` is "linear" or
/// "pure". Fidelity is included when `truth` is given.
Json estimate_record(const DetectionRecord& record, const std::string& mode, double solver_tol,
                     const std::optional<DensityOperator>& truth = std::nullopt);

struct PipelineOutcome {
  Json report;
  bool gates_passed = false;
};

/// build -> compile -> verify -> simulate -> estimate. Randomness derives
/// from `seed` through `derive_seed(seed, stage)`; the report contains no
/// timestamps, so equal configs give identical reports.
PipelineOutcome run_pipeline(const RunConfig& config);

}  // namespace sicmp

#endif  // SICMP_PIPELINE_H
