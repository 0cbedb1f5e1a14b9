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

#ifndef SICMP_VERIFY_H
#define SICMP_VERIFY_H

#include <filesystem>
#include <string>
#include <vector>

#include "sicmp/pipeline.h"

namespace sicmp {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;      // measured defect or count
  double threshold = 0.0;  // pass iff value <= threshold
  std::string detail;
};

struct VerifyOptions {
  Tolerances tolerances = tolerance_profile("default");
  std::vector<std::filesystem::path> netlists;  // extra files checked for element validity
  int random_states = 100;
  int manifold_states = 1000;
  std::uint64_t seed = 7;
};

/// Runs the invariant suite: SIC Gram conditions, Naimark unitarity and
/// probability scaling, factorization identities, netlist recomposition and
/// element counts, linear round trip, and the qutrit purity identities.
std::vector<CheckResult> verify_all(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& checks);
std::string format_check_table(const std::vector<CheckResult>& checks);

}  // namespace sicmp

#endif  // SICMP_VERIFY_H
