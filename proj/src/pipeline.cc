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

#include "sicmp/pipeline.h"

#include <cstdlib>
#include <functional>

#include "sicmp/multiport.h"
#include "sicmp/naimark.h"
#include "sicmp/rng.h"
#include "sicmp/sic.h"

namespace sicmp {
namespace {

const AffineLineSet& qutrit_lines() {
  static const AffineLineSet lines = derive_affine_lines(qutrit_sic());
  return lines;
}

template <typename F>
auto run_stage(const std::string& stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

Json eigen_json(const RealVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

}  // namespace

Tolerances tolerance_profile(const std::string& name) {
  if (name == "default") return {{"sic", 1e-12}, {"unitarity", 1e-10}, {"recompose", 1e-9}, {"solver", 1e-9}};
  if (name == "strict") return {{"sic", 1e-13}, {"unitarity", 1e-12}, {"recompose", 1e-10}, {"solver", 1e-10}};
  if (name == "loose") return {{"sic", 1e-10}, {"unitarity", 1e-8}, {"recompose", 1e-7}, {"solver", 1e-7}};
  throw std::invalid_argument("unknown tolerance profile '" + name + "'");
}

Tolerances default_tolerances() {
  const char* env = std::getenv("SICMP_TOLERANCE_PROFILE");
  return tolerance_profile(env && *env ? env : "default");
}

void RunConfig::validate() const {
  if (shots < 1) throw StageError("config", "shots must be a positive integer");
  for (const auto& [name, value] : tolerances) {
    if (!(value > 0.0)) throw StageError("config", "tolerance '" + name + "' must be positive");
  }
  for (const char* key : {"sic", "unitarity", "recompose", "solver"}) {
    if (!tolerances.count(key)) throw StageError("config", std::string("missing tolerance '") + key + "'");
  }
  if (estimate_mode != "pure" && estimate_mode != "linear") {
    throw StageError("config", "estimate mode must be 'pure' or 'linear'");
  }
  if (truth_path && !std::filesystem::exists(*truth_path)) {
    throw StageError("config", "truth file not found: " + truth_path->string());
  }
}

RunConfig RunConfig::merge_json(RunConfig base, const Json& j) {
  if (j.contains("device")) base.device = parse_device(j.at("device").get<std::string>());
  if (j.contains("shots")) base.shots = j.at("shots").get<std::int64_t>();
  if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("mode")) base.estimate_mode = j.at("mode").get<std::string>();
  if (j.contains("tolerances")) {
    for (const auto& [k, v] : j.at("tolerances").items()) base.tolerances[k] = v.get<double>();
  }
  if (j.contains("truth")) base.truth_path = j.at("truth").get<std::string>();
  if (j.contains("report")) base.report_path = j.at("report").get<std::string>();
  return base;
}

Json estimate_record(const DetectionRecord& record, const std::string& mode, double solver_tol,
                     const std::optional<DensityOperator>& truth) {
  const Device device = parse_device(record.device_label);
  const SicPovm povm = device == Device::kQubitSic ? qubit_sic() : qutrit_sic();
  const RealVector f = record.frequencies();
  if (f.size() != povm.num_outcomes()) throw std::invalid_argument("estimate: record has wrong number of detectors");

  Json out{{"mode", mode}, {"device", record.device_label}, {"frequencies", real_vector_to_json(f)}};
  DensityOperator rho = DensityOperator::maximally_mixed(povm.dim);
  if (mode == "linear") {
    rho = linear_reconstruct(OutcomeDistribution::from_probs(f, 1e-9), povm);
    out["rho"] = matrix_to_json(rho.matrix());
    out["psd"] = rho.is_psd();
    out["eigenvalues"] = eigen_json(rho.eigenvalues());
  } else if (mode == "pure") {
    PureStateEstimate e;
    if (device == Device::kQutritSic) {
      e = project_to_pure_manifold(f, qutrit_lines(), povm, solver_tol);
      out["constraints"] = {"sum_sq", "cubic_lines", "simplex"};
    } else {
      e = nearest_pure_distribution(f, povm, solver_tol);
      out["constraints"] = {"pure_state"};
    }
    rho = e.rho_star;
    out.update(estimate_to_json(e));
  } else {
    throw std::invalid_argument("estimate: unknown mode '" + mode + "'");
  }
  if (truth) {
    if (truth->dim() != povm.dim) throw std::invalid_argument("estimate: truth state has wrong dimension");
    out["fidelity"] = estimate_fidelity(rho, *truth);
  }
  return out;
}

PipelineOutcome run_pipeline(const RunConfig& config) {
  config.validate();
  const auto& tol = config.tolerances;
  PipelineOutcome result;
  Json& report = result.report;
  bool gates = true;
  auto gate = [&](Json& stage, bool ok) {
    stage["pass"] = ok;
    gates = gates && ok;
  };

  report["device"] = device_label(config.device);
  report["shots"] = config.shots;
  report["seed"] = config.seed;
  report["rng"] = std::string(SplitMix64::kAlgorithmId);
  report["tolerances"] = config.tolerances;

  const SicDevice dev = run_stage("build", [&] { return build_device(config.device); });
  {
    Json s;
    const SicReport sic = verify_sic(dev.povm, tol.at("sic"));
    const UnitarityReport u = check_unitary(dev.extension.completion.matrix(), tol.at("unitarity"));
    s["gram_deviation"] = sic.gram_deviation;
    s["identity_deviation"] = sic.identity_deviation;
    s["unitarity_defect"] = u.defect;
    gate(s, sic.pass && u.ok);
    report["build"] = s;
  }

  run_stage("compile", [&] {
    Json s;
    const ElementTally t = tally(dev.netlist);
    const int count = element_count(dev.netlist);
    const int bound = config.device == Device::kQubitSic ? 7 : 44;
    const OpticalNetlist reck = reck_decompose(dev.extension.completion.adjoint());
    s["elements"] = count;
    s["beam_splitters"] = t.beam_splitters;
    s["phase_shifters"] = t.phase_shifters;
    s["swaps"] = t.swaps;
    s["bound"] = bound;
    s["reck_elements"] = element_count(reck);
    s["netlist"] = netlist_to_json(dev.netlist);
    gate(s, count <= bound);
    report["compile"] = s;
  });

  run_stage("verify", [&] {
    Json s;
    const auto issues = check_netlist(dev.netlist);
    const RecompositionReport r =
        verify_netlist(dev.netlist, dev.extension.completion.adjoint().matrix(), tol.at("recompose"), true);
    s["issues"] = issues;
    s["recomposition_distance"] = r.distance;
    gate(s, issues.empty() && r.ok);
    report["verify"] = s;
  });

  const DensityOperator truth = run_stage("simulate", [&] {
    if (config.truth_path) return state_from_json(read_json_file(*config.truth_path));
    return DensityOperator::from_pure(random_pure_state(dev.povm.dim, derive_seed(config.seed, "state")));
  });
  if (truth.dim() != dev.povm.dim) throw StageError("simulate", "truth state has wrong dimension");
  const ExperimentResult exp = run_stage("simulate", [&] {
    return run_sic_experiment(truth, dev, config.shots, derive_seed(config.seed, "simulate"));
  });
  {
    Json s;
    s["truth_source"] = config.truth_path ? "file" : "random";
    s["truth"] = matrix_to_json(truth.matrix());
    s["ideal"] = real_vector_to_json(exp.ideal.probs());
    s["empirical"] = real_vector_to_json(exp.record.frequencies());
    s["record"] = record_to_json(exp.record);
    bool ok = true;
    if (exp.path_deviation) {
      s["path_deviation"] = *exp.path_deviation;
      ok = *exp.path_deviation <= tol.at("unitarity");
    }
    gate(s, ok);
    report["simulate"] = s;
  }

  run_stage("estimate", [&] {
    Json s = estimate_record(exp.record, config.estimate_mode, tol.at("solver"), truth);
    gate(s, config.estimate_mode == "linear" || s.at("converged").get<bool>());
    report["estimate"] = s;
  });

  report["gates_passed"] = gates;
  result.gates_passed = gates;
  return result;
}

}  // namespace sicmp
