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

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sicmp/json_io.h"
#include "sicmp/multiport.h"
#include "sicmp/naimark.h"
#include "sicmp/optics_sim.h"
#include "sicmp/pipeline.h"
#include "sicmp/rng.h"
#include "sicmp/sic.h"
#include "sicmp/tomography.h"
#include "sicmp/verify.h"

using namespace sicmp;

namespace {

// Exit codes: 0 success, 1 a verification gate failed, 2 bad input or stage error.
constexpr int kGateFailed = 1;
constexpr int kError = 2;

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(out, j);
  }
}

// "--tol 1e-9" sets every tolerance; "--tol solver=1e-8" sets one.
Tolerances apply_tol_flags(Tolerances base, const std::vector<std::string>& flags) {
  for (const auto& f : flags) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) {
      const double v = std::stod(f);
      for (auto& kv : base) kv.second = v;
    } else {
      const std::string key = f.substr(0, eq);
      if (!base.count(key)) throw std::invalid_argument("unknown tolerance '" + key + "'");
      base[key] = std::stod(f.substr(eq + 1));
    }
  }
  return base;
}

Matrix load_unitary(const std::string& path) {
  const Json j = read_json_file(path);
  return matrix_from_json(j.contains("unitary") ? j.at("unitary") : j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SIC-POVM multiport compiler, simulator and estimator"};
  app.require_subcommand(1);

  // sic
  auto* sic = app.add_subcommand("sic", "SIC-POVM construction");
  sic->require_subcommand(1);
  auto* sic_build = sic->add_subcommand("build", "Write the qubit or qutrit SIC-POVM");
  int sic_dim = 2;
  std::string sic_out;
  sic_build->add_option("--dim", sic_dim, "Dimension")->required()->check(CLI::IsMember({2, 3}));
  sic_build->add_option("--out", sic_out, "Output file (stdout if omitted)");
  auto* sic_verify = sic->add_subcommand("verify", "Check Gram and completeness conditions");
  std::string sic_in;
  double sic_tol = kNormTol;
  sic_verify->add_option("--in", sic_in, "SIC JSON file")->required()->check(CLI::ExistingFile);
  sic_verify->add_option("--tol", sic_tol, "Tolerance")->check(CLI::PositiveNumber);

  // naimark
  auto* naimark = app.add_subcommand("naimark", "Naimark extensions");
  naimark->require_subcommand(1);
  auto* naimark_build = naimark->add_subcommand("build", "Write the extension unitary for a device");
  std::string nm_device, nm_out;
  naimark_build->add_option("--device", nm_device, "qubit-sic or qutrit-sic")->required();
  naimark_build->add_option("--out", nm_out, "Output file");

  // compile
  auto* compile = app.add_subcommand("compile", "Compile a unitary into beam splitters and phase shifters");
  std::string c_target, c_unitary, c_method = "reck", c_out;
  compile->add_option("--target", c_target, "qubit-sic or qutrit-sic");
  compile->add_option("--unitary", c_unitary, "Unitary JSON (matrix or Naimark file)")->check(CLI::ExistingFile);
  compile->add_option("--method", c_method, "Decomposition for --unitary")->check(CLI::IsMember({"reck"}));
  compile->add_option("--out", c_out, "Output netlist file");
  auto* c_verify = compile->add_subcommand("verify", "Recompose a netlist and compare with a unitary");
  std::string cv_net, cv_unitary;
  double cv_tol = 1e-9;
  bool cv_phase = false, cv_adjoint = false;
  c_verify->add_option("--net", cv_net, "Netlist file")->required()->check(CLI::ExistingFile);
  c_verify->add_option("--unitary", cv_unitary, "Unitary JSON")->required()->check(CLI::ExistingFile);
  c_verify->add_option("--tol", cv_tol, "Frobenius tolerance")->check(CLI::PositiveNumber);
  c_verify->add_flag("--up-to-global-phase", cv_phase, "Ignore a global phase");
  c_verify->add_flag("--adjoint", cv_adjoint, "Compare against the adjoint of the unitary");
  auto* c_count = compile->add_subcommand("count", "Count optical elements in a netlist");
  std::string cc_net;
  c_count->add_option("--net", cc_net, "Netlist file")->required()->check(CLI::ExistingFile);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Sample detector clicks");
  std::string s_device = "qubit-sic", s_state, s_out;
  std::int64_t s_shots = 100000;
  std::uint64_t s_seed = 1;
  std::optional<int> s_basis;
  simulate->add_option("--device", s_device, "qubit-sic or qutrit-sic");
  simulate->add_option("--state", s_state, "Input state JSON (vector or density matrix)")->check(CLI::ExistingFile);
  simulate->add_option("--basis", s_basis, "Use computational basis state |k> (0-based)");
  simulate->add_option("--shots", s_shots, "Number of photons");
  simulate->add_option("--seed", s_seed, "Seed");
  simulate->add_option("--out", s_out, "Output record file");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Reconstruct a state from a detection record");
  std::string e_record, e_mode = "pure", e_out, e_truth;
  std::vector<std::string> e_tol;
  estimate->add_option("--record", e_record, "Record JSON")->required()->check(CLI::ExistingFile);
  estimate->add_option("--mode", e_mode, "linear or pure")->check(CLI::IsMember({"linear", "pure"}));
  estimate->add_option("--truth", e_truth, "Reference state JSON")->check(CLI::ExistingFile);
  estimate->add_option("--tol", e_tol, "Tolerance override(s)");
  estimate->add_option("--out", e_out, "Output file");

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "build -> compile -> verify -> simulate -> estimate");
  std::string p_config, p_device, p_mode, p_truth, p_out;
  std::optional<std::int64_t> p_shots;
  std::optional<std::uint64_t> p_seed;
  std::vector<std::string> p_tol;
  pipeline->add_option("--config", p_config, "JSON config file")->check(CLI::ExistingFile);
  pipeline->add_option("--device", p_device, "qubit-sic or qutrit-sic");
  pipeline->add_option("--shots", p_shots, "Number of photons");
  pipeline->add_option("--seed", p_seed, "Top-level seed");
  pipeline->add_option("--mode", p_mode, "Estimator: linear or pure");
  pipeline->add_option("--truth", p_truth, "True input state JSON");
  pipeline->add_option("--tol", p_tol, "Tolerance override(s)");
  pipeline->add_option("--out", p_out, "Report file");

  // verify-all
  auto* verify_cmd = app.add_subcommand("verify-all", "Run the invariant suite");
  std::vector<std::string> va_nets, va_tol;
  std::uint64_t va_seed = 7;
  verify_cmd->add_option("--netlist", va_nets, "Extra netlist files to check")->check(CLI::ExistingFile);
  verify_cmd->add_option("--tol", va_tol, "Tolerance override(s)");
  verify_cmd->add_option("--seed", va_seed, "Seed for random states");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sic_build) {
      emit(sic_to_json(sic_dim == 2 ? qubit_sic() : qutrit_sic()), sic_out);
      return 0;
    }
    if (*sic_verify) {
      const SicReport r = verify_sic(sic_from_json(read_json_file(sic_in)), sic_tol);
      std::printf("gram deviation %.3e, identity deviation %.3e: %s\n", r.gram_deviation, r.identity_deviation,
                  r.pass ? "PASS" : "FAIL");
      return r.pass ? 0 : kGateFailed;
    }
    if (*naimark_build) {
      const Device d = parse_device(nm_device);
      emit(naimark_to_json(d == Device::kQubitSic ? qubit_naimark_unitary() : qutrit_naimark_unitary()), nm_out);
      return 0;
    }
    if (*c_verify) {
      const OpticalNetlist net = netlist_from_json(read_json_file(cv_net));
      Matrix target = load_unitary(cv_unitary);
      if (cv_adjoint) target = target.adjoint().eval();
      const RecompositionReport r = verify_netlist(net, target, cv_tol, cv_phase);
      std::printf("distance %.3e (tol %.1e): %s\n", r.distance, cv_tol, r.ok ? "PASS" : "FAIL");
      return r.ok ? 0 : kGateFailed;
    }
    if (*c_count) {
      const OpticalNetlist net = netlist_from_json(read_json_file(cc_net));
      const ElementTally t = tally(net);
      std::printf("elements %d (beam splitters %d, phase shifters %d; swaps %d not counted)\n", element_count(net),
                  t.beam_splitters, t.phase_shifters, t.swaps);
      return 0;
    }
    if (*compile) {
      if (c_target.empty() == c_unitary.empty()) {
        std::cerr << "compile: give exactly one of --target or --unitary\n";
        return kError;
      }
      OpticalNetlist net;
      if (!c_target.empty()) {
        net = build_device(parse_device(c_target)).netlist;
      } else {
        net = reck_decompose(UnitaryMatrix::from_matrix(load_unitary(c_unitary), kOperatorTol));
      }
      emit(netlist_to_json(net), c_out);
      std::fprintf(stderr, "compiled %d elements\n", element_count(net));
      return 0;
    }
    if (*simulate) {
      const Device d = parse_device(s_device);
      const int dim = device_dim(d);
      DensityOperator state = DensityOperator::maximally_mixed(dim);
      if (!s_state.empty()) {
        state = state_from_json(read_json_file(s_state));
      } else if (s_basis) {
        if (*s_basis < 0 || *s_basis >= dim) throw std::invalid_argument("--basis out of range");
        state = DensityOperator::from_pure(PureState::from_amplitudes(Vector::Unit(dim, *s_basis)));
      } else {
        state = DensityOperator::from_pure(random_pure_state(dim, derive_seed(s_seed, "state")));
      }
      const ExperimentResult r = run_sic_experiment(state, d, s_shots, derive_seed(s_seed, "simulate"));
      emit(record_to_json(r.record, r.ideal), s_out);
      return 0;
    }
    if (*estimate) {
      const Tolerances tol = apply_tol_flags(default_tolerances(), e_tol);
      std::optional<DensityOperator> truth;
      if (!e_truth.empty()) truth = state_from_json(read_json_file(e_truth));
      const Json rec = read_json_file(e_record);
      // Accept a bare record or a pipeline report with an embedded record.
      const Json& rj = rec.contains("simulate") ? rec.at("simulate").at("record") : rec;
      emit(estimate_record(record_from_json(rj), e_mode, tol.at("solver"), truth), e_out);
      return 0;
    }
    if (*pipeline) {
      RunConfig cfg;
      cfg.tolerances = default_tolerances();
      if (!p_config.empty()) cfg = RunConfig::merge_json(cfg, read_json_file(p_config));
      if (!p_device.empty()) cfg.device = parse_device(p_device);
      if (p_shots) cfg.shots = *p_shots;
      if (p_seed) cfg.seed = *p_seed;
      if (!p_mode.empty()) cfg.estimate_mode = p_mode;
      if (!p_truth.empty()) cfg.truth_path = p_truth;
      if (!p_out.empty()) cfg.report_path = p_out;
      cfg.tolerances = apply_tol_flags(cfg.tolerances, p_tol);
      const PipelineOutcome r = run_pipeline(cfg);
      emit(r.report, cfg.report_path ? cfg.report_path->string() : "");
      if (!r.gates_passed) std::cerr << "pipeline: a verification gate failed\n";
      return r.gates_passed ? 0 : kGateFailed;
    }
    if (*verify_cmd) {
      VerifyOptions opt;
      opt.tolerances = apply_tol_flags(default_tolerances(), va_tol);
      opt.seed = va_seed;
      for (const auto& n : va_nets) opt.netlists.emplace_back(n);
      const auto checks = verify_all(opt);
      std::cout << format_check_table(checks);
      return all_passed(checks) ? 0 : kGateFailed;
    }
  } catch (const StageError& e) {
    std::cerr << "error in stage " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return 0;
}
