// Copyright 2026 The symclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symclone/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "symclone/jsonio.hpp"
#include "symclone/mub.hpp"
#include "symclone/oracle.hpp"
#include "symclone/pipeline.hpp"
#include "symclone/verify.hpp"

namespace symclone {

namespace {

struct RunConfig {
  int d = 0;
  int M = 0;
  int N = 0;
  std::string state_path;
  std::string pure_spec;
  std::string reference_spec;
  std::string format = "json";
  std::string out_path;
  std::string stages;
  std::string task;
  int keep = 1;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 0.0;  // 0 means library defaults
  bool inject_fault = false;
};

DensityTolerances input_tolerances(const RunConfig& config) {
  DensityTolerances tol;
  if (config.tolerance > 0.0) {
    tol.hermiticity = config.tolerance;
    tol.trace = config.tolerance;
    tol.min_eigenvalue = -config.tolerance;
  }
  return tol;
}

PureState parse_pure(const std::string& spec, int d) {
  std::vector<std::complex<double>> values = parse_complex_list(spec);
  if (d > 0 && static_cast<int>(values.size()) != d) {
    throw DimensionError("amplitude list has " + std::to_string(values.size()) +
                         " components, expected d = " + std::to_string(d));
  }
  Eigen::VectorXcd amp(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) amp[static_cast<Eigen::Index>(i)] = values[i];
  double norm = amp.norm();
  if (norm < 1e-12) throw DimensionError("amplitude list has zero norm");
  amp /= norm;
  return PureState{std::move(amp)};
}

// Loads the input state from --state or --pure and reconciles dimensions
// with any explicit --d/--M flags.
SymDensity load_input(const RunConfig& config) {
  if (config.state_path.empty() == config.pure_spec.empty()) {
    throw ParseError("provide exactly one of --state or --pure");
  }
  if (!config.state_path.empty()) {
    SymDensity rho = read_state_file(config.state_path);
    if (config.d > 0 && config.d != rho.d()) {
      throw DimensionError("state file has d=" + std::to_string(rho.d()) +
                           " but --d " + std::to_string(config.d) + " was given");
    }
    if (config.M > 0 && config.M != rho.M()) {
      throw DimensionError("state file has M=" + std::to_string(rho.M()) +
                           " but --M " + std::to_string(config.M) + " was given");
    }
    return rho;
  }
  PureState x = parse_pure(config.pure_spec, config.d);
  int copies = config.M > 0 ? config.M : 1;
  return pure_power_density(x, copies);
}

nlohmann::ordered_json rational_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["exact"] = r.str();
  j["value"] = r.to_double();
  return j;
}

nlohmann::ordered_json diagnostics_json(const DensityDiagnostics& diag) {
  nlohmann::ordered_json j;
  j["hermiticity_deviation"] = diag.hermiticity_deviation;
  j["trace_deviation"] = diag.trace_deviation;
  j["min_eigenvalue"] = diag.min_eigenvalue;
  j["pass"] = diag.pass;
  return j;
}

nlohmann::ordered_json shrink_json(const ShrinkReport& report) {
  nlohmann::ordered_json j;
  if (report.factor) {
    j["factor"] = *report.factor;
  } else {
    j["factor"] = nullptr;
  }
  j["residual"] = report.residual;
  j["degenerate_input"] = report.degenerate;
  return j;
}

void emit(const RunConfig& config, const nlohmann::ordered_json& doc, std::ostream& out) {
  out << dump_json17(doc);
  if (!config.out_path.empty()) {
    std::ofstream file(config.out_path);
    if (!file) throw ParseError("cannot write to '" + config.out_path + "'");
    file << dump_json17(doc);
  }
}

int cmd_clone(const RunConfig& config, std::ostream& out) {
  SymDensity input = load_input(config);
  if (config.N < input.M()) {
    throw DimensionError("--N must be at least the number of input copies M=" +
                         std::to_string(input.M()));
  }
  DensityDiagnostics input_diag = validate_density(input, input_tolerances(config));
  if (!input_diag.pass) {
    throw DimensionError("input state failed density validation (hermiticity " +
                         std::to_string(input_diag.hermiticity_deviation) + ", trace " +
                         std::to_string(input_diag.trace_deviation) + ", min eigenvalue " +
                         std::to_string(input_diag.min_eigenvalue) + ")");
  }

  SymDensity output = clone_state(input, config.N);
  QuditDensity in_red = reduce_single(input);
  QuditDensity out_red = reduce_single(output);

  if (config.format == "csv") {
    out << state_to_csv(output);
    return 0;
  }

  nlohmann::ordered_json summary;
  summary["d"] = input.d();
  summary["M"] = input.M();
  summary["N"] = config.N;
  summary["output_trace"] = output.matrix().trace().real();
  summary["output_diagnostics"] = diagnostics_json(validate_density(output));
  summary["bem_shrink"] = rational_json(bem_shrink(input.M(), config.N, input.d()));
  summary["extracted_shrink"] = shrink_json(extract_shrink(in_red, out_red));
  if (!config.reference_spec.empty()) {
    PureState ref = parse_pure(config.reference_spec, input.d());
    summary["fidelity_vs_reference"] = fidelity_pure(out_red, ref);
    summary["reduced_fidelity_vs_reference_input"] = fidelity_pure(in_red, ref);
  }

  nlohmann::ordered_json doc;
  doc["summary"] = std::move(summary);
  doc["output_state"] = state_to_json(output);
  emit(config, doc, out);
  return 0;
}

int cmd_reduce(const RunConfig& config, std::ostream& out) {
  SymDensity input = load_input(config);
  if (config.keep < 1 || config.keep > input.M()) {
    throw DimensionError("--keep must be in 1..M");
  }
  DensityDiagnostics input_diag = validate_density(input, input_tolerances(config));
  if (!input_diag.pass) {
    throw DimensionError("input state failed density validation");
  }

  SymDensity kept = partial_keep(input, config.keep);
  if (config.format == "csv") {
    out << state_to_csv(kept);
    return 0;
  }
  nlohmann::ordered_json doc;
  doc["summary"]["d"] = input.d();
  doc["summary"]["M"] = input.M();
  doc["summary"]["keep"] = config.keep;
  doc["summary"]["diagnostics"] = diagnostics_json(validate_density(kept));
  doc["reduced_state"] = state_to_json(kept);
  emit(config, doc, out);
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  VerifyOptions options;
  options.seed = config.seed;
  options.inject_fault = config.inject_fault;
  std::vector<CheckResult> results = run_verification(options);
  bool ok = all_passed(results);

  if (config.format == "csv") {
    out << "name,pass,max_deviation\n";
    for (const CheckResult& r : results) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", r.max_deviation);
      out << r.name << "," << (r.pass ? "true" : "false") << "," << buf << "\n";
    }
  } else if (config.format == "table") {
    for (const CheckResult& r : results) {
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(40) << r.name
          << std::scientific << std::setprecision(3) << r.max_deviation;
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
    }
    out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  } else {
    nlohmann::ordered_json doc;
    doc["seed"] = config.seed;
    doc["fault_injected"] = config.inject_fault;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& r : results) {
      nlohmann::ordered_json c;
      c["name"] = r.name;
      c["pass"] = r.pass;
      c["max_deviation"] = r.max_deviation;
      if (!r.detail.empty()) c["detail"] = r.detail;
      checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);
    doc["all_pass"] = ok;
    emit(config, doc, out);
  }
  return ok ? 0 : 1;
}

int cmd_mub(const RunConfig& config, std::ostream& out) {
  MubFamily family = mub_family(config.d);
  const int d = config.d;

  double max_orthonormality = 0.0;
  for (const auto& basis : family.bases) {
    max_orthonormality = std::max(
        max_orthonormality,
        (basis.adjoint() * basis - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff());
  }
  double min_cross = 1.0, max_cross = 0.0;
  for (std::size_t a = 0; a < family.bases.size(); ++a) {
    for (std::size_t b = a + 1; b < family.bases.size(); ++b) {
      Eigen::MatrixXd sq = (family.bases[a].adjoint() * family.bases[b]).cwiseAbs2();
      min_cross = std::min(min_cross, sq.minCoeff());
      max_cross = std::max(max_cross, sq.maxCoeff());
    }
  }
  QkdAttackReport attack = qkd_attack_report(d);

  if (config.format == "csv") {
    out << "basis,state,component,re,im\n";
    for (std::size_t b = 0; b < family.bases.size(); ++b) {
      for (int t = 0; t < d; ++t) {
        for (int j = 0; j < d; ++j) {
          char re[40], im[40];
          std::snprintf(re, sizeof(re), "%.17g", family.bases[b](j, t).real());
          std::snprintf(im, sizeof(im), "%.17g", family.bases[b](j, t).imag());
          out << b << "," << t << "," << j << "," << re << "," << im << "\n";
        }
      }
    }
    return 0;
  }

  nlohmann::ordered_json doc;
  doc["d"] = d;
  doc["num_bases"] = static_cast<int>(family.bases.size());
  nlohmann::ordered_json bases = nlohmann::ordered_json::array();
  for (const auto& basis : family.bases) {
    nlohmann::ordered_json states = nlohmann::ordered_json::array();
    for (int t = 0; t < d; ++t) {
      nlohmann::ordered_json amps = nlohmann::ordered_json::array();
      for (int j = 0; j < d; ++j) {
        amps.push_back({{"re", basis(j, t).real()}, {"im", basis(j, t).imag()}});
      }
      states.push_back(std::move(amps));
    }
    bases.push_back(std::move(states));
  }
  doc["bases"] = std::move(bases);
  doc["overlap"]["max_orthonormality_deviation"] = max_orthonormality;
  doc["overlap"]["min_cross_overlap_squared"] = min_cross;
  doc["overlap"]["max_cross_overlap_squared"] = max_cross;
  doc["overlap"]["unbiased_target"] = 1.0 / d;
  doc["attack"]["states_checked"] = attack.states_checked;
  doc["attack"]["min_fidelity"] = attack.min_fidelity;
  doc["attack"]["max_fidelity"] = attack.max_fidelity;
  doc["attack"]["mean_fidelity"] = attack.mean_fidelity;
  doc["attack"]["analytic_fidelity"] = rational_json(attack.analytic_fidelity);
  doc["attack"]["analytic_error_rate"] = rational_json(attack.analytic_error_rate);
  emit(config, doc, out);
  return 0;
}

nlohmann::ordered_json scenario_json(const ScenarioReport& report) {
  nlohmann::ordered_json j;
  j["strategy"] = report.strategy;
  j["d"] = report.d;
  nlohmann::ordered_json stages = nlohmann::ordered_json::array();
  for (const StagePlan& s : report.stages) {
    stages.push_back({{"target", s.target}, {"keep", s.keep}});
  }
  j["stages"] = std::move(stages);
  nlohmann::ordered_json fids = nlohmann::ordered_json::array();
  for (const FidelityEntry& e : report.fidelities) {
    nlohmann::ordered_json f;
    f["label"] = e.label;
    f["value"] = e.value;
    if (e.exact) f["exact"] = e.exact->str();
    f["provenance"] =
        e.provenance == Provenance::kComputed ? "computed" : "recorded-constant";
    if (e.threshold) f["threshold"] = e.threshold->str();
    if (e.meets_threshold) f["meets_threshold"] = *e.meets_threshold;
    fids.push_back(std::move(f));
  }
  j["fidelities"] = std::move(fids);
  j["passes_all"] = report.passes_all;
  j["note"] = report.note;
  return j;
}

void scenario_table(const std::vector<ScenarioReport>& reports, std::ostream& out) {
  out << std::left << std::setw(46) << "strategy" << std::setw(28) << "copy" << std::setw(12)
      << "fidelity" << std::setw(12) << "exact" << std::setw(12) << "threshold"
      << "verdict\n";
  for (const ScenarioReport& r : reports) {
    bool first = true;
    for (const FidelityEntry& e : r.fidelities) {
      out << std::left << std::setw(46) << (first ? r.strategy : "") << std::setw(28)
          << e.label << std::setw(12) << std::fixed << std::setprecision(6) << e.value
          << std::setw(12) << (e.exact ? e.exact->str() : "-") << std::setw(12)
          << (e.threshold ? e.threshold->str() : "-")
          << (e.meets_threshold ? (*e.meets_threshold ? "pass" : "FAIL") : "-") << "\n";
      first = false;
    }
    out << std::left << std::setw(46) << "" << "=> " << (r.passes_all ? "meets both demands" : "insufficient")
        << "\n";
  }
}

nlohmann::ordered_json cascade_json(const CascadeReport& report) {
  nlohmann::ordered_json j;
  j["d"] = report.d;
  j["pure_input"] = report.pure_input;
  nlohmann::ordered_json stages = nlohmann::ordered_json::array();
  for (const CascadeStage& s : report.stages) {
    nlohmann::ordered_json stage;
    stage["input_copies"] = s.input_copies;
    stage["target"] = s.target;
    stage["keep"] = s.keep;
    stage["per_copy_fidelity"] = s.per_copy_fidelity;
    if (s.shrink) {
      stage["cumulative_shrink"] = *s.shrink;
    } else {
      stage["cumulative_shrink"] = nullptr;
    }
    stage["shrink_residual"] = s.shrink_residual;
    if (s.predicted_fidelity) stage["predicted_fidelity"] = rational_json(*s.predicted_fidelity);
    stages.push_back(std::move(stage));
  }
  j["stages"] = std::move(stages);
  return j;
}

void cascade_table(const CascadeReport& report, std::ostream& out) {
  out << std::left << std::setw(8) << "stage" << std::setw(8) << "M" << std::setw(8) << "N"
      << std::setw(8) << "keep" << std::setw(16) << "fidelity" << std::setw(16) << "predicted"
      << "shrink\n";
  for (std::size_t i = 0; i < report.stages.size(); ++i) {
    const CascadeStage& s = report.stages[i];
    out << std::left << std::setw(8) << (i + 1) << std::setw(8) << s.input_copies
        << std::setw(8) << s.target << std::setw(8) << s.keep << std::setw(16) << std::fixed
        << std::setprecision(10) << s.per_copy_fidelity << std::setw(16)
        << (s.predicted_fidelity ? s.predicted_fidelity->str() : "-");
    if (s.shrink) {
      out << std::setprecision(10) << *s.shrink;
    } else {
      out << "-";
    }
    out << "\n";
  }
}

int cmd_pipeline(const RunConfig& config, std::ostream& out) {
  if (!config.task.empty()) {
    if (config.task != "paper-example") {
      throw ParseError("unknown task '" + config.task + "' (available: paper-example)");
    }
    std::vector<ScenarioReport> reports = run_strategy_comparison();
    if (config.format == "table") {
      scenario_table(reports, out);
    } else if (config.format == "csv") {
      out << "strategy,label,value,exact,provenance,threshold,meets_threshold\n";
      for (const ScenarioReport& r : reports) {
        for (const FidelityEntry& e : r.fidelities) {
          char buf[40];
          std::snprintf(buf, sizeof(buf), "%.17g", e.value);
          out << "\"" << r.strategy << "\"," << "\"" << e.label << "\"," << buf << ","
              << (e.exact ? e.exact->str() : "-") << ","
              << (e.provenance == Provenance::kComputed ? "computed" : "recorded-constant")
              << "," << (e.threshold ? e.threshold->str() : "-") << ","
              << (e.meets_threshold ? (*e.meets_threshold ? "true" : "false") : "-") << "\n";
        }
      }
    } else {
      nlohmann::ordered_json doc;
      nlohmann::ordered_json scenarios = nlohmann::ordered_json::array();
      for (const ScenarioReport& r : reports) scenarios.push_back(scenario_json(r));
      doc["task"] = "paper-example";
      doc["strategies"] = std::move(scenarios);
      emit(config, doc, out);
    }
    return 0;
  }

  if (config.stages.empty()) {
    throw ParseError("pipeline needs either --task or --stages");
  }
  std::vector<StagePlan> plan = parse_stage_plan(config.stages);

  CascadeReport report = [&] {
    if (!config.pure_spec.empty() && config.state_path.empty()) {
      PureState x = parse_pure(config.pure_spec, config.d);
      return cascade(x, config.M > 0 ? config.M : 1, plan);
    }
    SymDensity rho = load_input(config);
    if (config.reference_spec.empty()) {
      throw DimensionError("cascade on a state file needs --reference for fidelities");
    }
    return cascade(rho, parse_pure(config.reference_spec, rho.d()), plan);
  }();

  if (config.format == "table") {
    cascade_table(report, out);
  } else {
    nlohmann::ordered_json doc = cascade_json(report);
    emit(config, doc, out);
  }
  return 0;
}

void add_common_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--seed", config.seed, "Random seed for generated instances");
  cmd->add_option("--tolerance", config.tolerance,
                  "Override the input-state validation tolerance");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"universal cloning of symmetric-subspace states"};
  app.name("symclone");
  app.require_subcommand(1);

  CLI::App* clone_cmd = app.add_subcommand("clone", "Clone a symmetric state M -> N");
  clone_cmd->add_option("--d", config.d, "Levels per system");
  clone_cmd->add_option("--M", config.M, "Input copies (for --pure; state files carry M)");
  clone_cmd->add_option("--N", config.N, "Output copies")->required();
  clone_cmd->add_option("--state", config.state_path, "Input SymDensity JSON file");
  clone_cmd->add_option("--pure", config.pure_spec, "Inline pure-state amplitudes x1,x2,...");
  clone_cmd->add_option("--reference", config.reference_spec,
                        "Reference pure state for fidelity reporting");
  clone_cmd->add_option("--out", config.out_path, "Also write the JSON document to a file");
  add_common_flags(clone_cmd, config);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Trace a symmetric state down to fewer systems");
  reduce_cmd->add_option("--d", config.d, "Levels per system");
  reduce_cmd->add_option("--M", config.M, "Input copies (for --pure)");
  reduce_cmd->add_option("--keep", config.keep, "Systems to keep (default 1)");
  reduce_cmd->add_option("--state", config.state_path, "Input SymDensity JSON file");
  reduce_cmd->add_option("--pure", config.pure_spec, "Inline pure-state amplitudes");
  reduce_cmd->add_option("--out", config.out_path, "Also write the JSON document to a file");
  add_common_flags(reduce_cmd, config);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the full property grid");
  verify_cmd->add_flag("--inject-fault", config.inject_fault,
                       "Perturb one cloning amplitude to prove the suite notices");
  verify_cmd->add_option("--out", config.out_path, "Also write the JSON document to a file");
  add_common_flags(verify_cmd, config);

  CLI::App* mub_cmd = app.add_subcommand("mub", "Mutually unbiased bases and the cloning attack");
  mub_cmd->add_option("--d", config.d, "Prime dimension")->required();
  mub_cmd->add_option("--out", config.out_path, "Also write the JSON document to a file");
  add_common_flags(mub_cmd, config);

  CLI::App* pipeline_cmd = app.add_subcommand("pipeline", "Strategy comparison and cascaded cloning");
  pipeline_cmd->add_option("--task", config.task, "Named scenario (paper-example)");
  pipeline_cmd->add_option("--stages", config.stages, "Cascade plan, e.g. \"3:keep2,3\"");
  pipeline_cmd->add_option("--d", config.d, "Levels per system");
  pipeline_cmd->add_option("--M", config.M, "Input copies (for --pure)");
  pipeline_cmd->add_option("--state", config.state_path, "Input SymDensity JSON file");
  pipeline_cmd->add_option("--pure", config.pure_spec, "Inline pure-state amplitudes");
  pipeline_cmd->add_option("--reference", config.reference_spec,
                           "Reference pure state for fidelities");
  pipeline_cmd->add_option("--out", config.out_path, "Also write the JSON document to a file");
  add_common_flags(pipeline_cmd, config);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));

    if (mub_cmd->parsed() && !is_prime(config.d)) {
      err << "symclone mub: d must be prime (got " << config.d << ")\n";
      return 2;
    }
    if (clone_cmd->parsed()) return cmd_clone(config, out);
    if (reduce_cmd->parsed()) return cmd_reduce(config, out);
    if (verify_cmd->parsed()) return cmd_verify(config, out);
    if (mub_cmd->parsed()) return cmd_mub(config, out);
    if (pipeline_cmd->parsed()) return cmd_pipeline(config, out);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const ParseError& e) {
    err << "symclone: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "symclone: " << e.what() << "\n";
    return 3;
  } catch (const ScaleError& e) {
    err << "symclone: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace symclone
