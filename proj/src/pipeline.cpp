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

#include "symclone/pipeline.hpp"

#include <cmath>

namespace symclone {

SymDensity partial_keep(const SymDensity& rho, int keep) {
  const int d = rho.d();
  const int N = rho.M();
  if (keep < 1 || keep > N) throw DimensionError("partial_keep requires 1 <= keep <= N");
  if (keep == N) return rho;

  SymBasis kept(d, keep);
  SymBasis traced(d, N - keep);
  SymBasis full(d, N);
  const double denom = static_cast<double>(binomial(N, keep));
  const Eigen::MatrixXcd& lam = rho.matrix();

  // |v>_N splits over a keep/(N-keep) bipartition with coefficient
  // sqrt(prod_i C(v_i, n_i) / C(N, keep)) on |n> (x) |v-n>.
  SymDensity out(d, keep);
  for (std::int64_t a = 0; a < kept.size(); ++a) {
    const Occupation& n = kept.at(a);
    for (std::int64_t b = 0; b < kept.size(); ++b) {
      const Occupation& np = kept.at(b);
      std::complex<double> acc = 0.0;
      for (std::int64_t t = 0; t < traced.size(); ++t) {
        const Occupation& r = traced.at(t);
        std::int64_t prod = 1;
        Occupation v = n, vp = np;
        for (int i = 0; i < d; ++i) {
          int ri = r.counts[static_cast<std::size_t>(i)];
          v.counts[static_cast<std::size_t>(i)] += ri;
          vp.counts[static_cast<std::size_t>(i)] += ri;
          prod = checked_mul(prod, binomial(v.counts[static_cast<std::size_t>(i)],
                                            n.counts[static_cast<std::size_t>(i)]));
          prod = checked_mul(prod, binomial(vp.counts[static_cast<std::size_t>(i)],
                                            np.counts[static_cast<std::size_t>(i)]));
        }
        acc += std::sqrt(static_cast<double>(prod)) / denom *
               lam(full.rank_of(v), full.rank_of(vp));
      }
      out.matrix()(a, b) = acc;
    }
  }
  return out;
}

std::vector<StagePlan> parse_stage_plan(const std::string& text) {
  std::vector<StagePlan> plan;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(pos, end - pos);
    std::size_t colon = token.find(':');
    std::string target_part = token.substr(0, colon == std::string::npos ? token.size() : colon);

    StagePlan stage;
    try {
      std::size_t used = 0;
      stage.target = std::stoi(target_part, &used);
      if (used != target_part.size() || target_part.empty()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad stage plan token '" + token + "' (expected e.g. \"3:keep2\")");
    }
    if (colon != std::string::npos) {
      std::string keep_part = token.substr(colon + 1);
      if (keep_part.rfind("keep", 0) != 0) {
        throw ParseError("bad stage plan token '" + token + "' (expected e.g. \"3:keep2\")");
      }
      try {
        std::size_t used = 0;
        stage.keep = std::stoi(keep_part.substr(4), &used);
        if (used != keep_part.size() - 4) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("bad keep clause in stage plan token '" + token + "'");
      }
    } else {
      stage.keep = stage.target;
    }
    plan.push_back(stage);
    pos = end + 1;
    if (end == text.size()) break;
  }
  if (plan.empty()) throw ParseError("empty stage plan");
  return plan;
}

namespace {

CascadeReport run_cascade(SymDensity state, const PureState& reference,
                          const std::vector<StagePlan>& plan, bool pure_input) {
  if (reference.dim() != state.d()) {
    throw DimensionError("reference state dimension does not match input");
  }
  require_normalized(reference);
  if (plan.empty()) throw DimensionError("cascade needs at least one stage");

  CascadeReport report;
  report.d = state.d();
  report.pure_input = pure_input;

  QuditDensity ref_density{reference.amp * reference.amp.adjoint()};
  Rational predicted_shrink(1);

  for (const StagePlan& stage : plan) {
    const int copies = state.M();
    if (stage.target < copies) {
      throw DimensionError("infeasible stage: cannot clone " + std::to_string(copies) +
                           " kept copies to " + std::to_string(stage.target));
    }
    if (stage.keep < 1 || stage.keep > stage.target) {
      throw DimensionError("infeasible stage: keep must be in 1..target");
    }

    SymDensity cloned = clone_state(state, stage.target);
    QuditDensity per_copy = reduce_single(cloned);

    CascadeStage result;
    result.input_copies = copies;
    result.target = stage.target;
    result.keep = stage.keep;
    result.per_copy_fidelity = fidelity_pure(per_copy, reference);
    ShrinkReport shrink = extract_shrink(ref_density, per_copy);
    result.shrink = shrink.factor;
    result.shrink_residual = shrink.residual;
    if (pure_input) {
      predicted_shrink = predicted_shrink * bem_shrink(copies, stage.target, state.d());
      result.predicted_fidelity = fidelity_from_shrink(predicted_shrink, state.d());
    }
    report.stages.push_back(std::move(result));

    state = partial_keep(cloned, stage.keep);
  }
  return report;
}

}  // namespace

CascadeReport cascade(const SymDensity& initial, const PureState& reference,
                      const std::vector<StagePlan>& plan) {
  return run_cascade(initial, reference, plan, false);
}

CascadeReport cascade(const PureState& x, int copies, const std::vector<StagePlan>& plan) {
  return run_cascade(pure_power_density(x, copies), x, plan, true);
}

Rational fidelity_from_shrink(const Rational& f, int d) {
  return (Rational(d - 1, 1) * f + Rational(1)) / Rational(d, 1);
}

namespace {

FidelityEntry entry(std::string label, Rational value, Rational threshold) {
  FidelityEntry e;
  e.label = std::move(label);
  e.exact = value;
  e.value = value.to_double();
  e.provenance = Provenance::kComputed;
  e.threshold = threshold;
  e.meets_threshold = value >= threshold;
  return e;
}

}  // namespace

std::vector<ScenarioReport> run_strategy_comparison() {
  const Rational demand_one(7, 9);     // first computation, single copy
  const Rational demand_three(79, 108);  // second computation, three copies
  std::vector<ScenarioReport> reports;

  {
    ScenarioReport r;
    r.strategy = "1: direct 1->4";
    r.stages = {{4, 4}};
    r.fidelities.push_back(entry("computation 1 copy", fidelity_single(1, 4, 2), demand_one));
    r.fidelities.push_back(
        entry("computation 2 copies (x3)", fidelity_single(1, 4, 2), demand_three));
    r.note = "all four copies at 3/4: enough for the second computation, not the first";
    reports.push_back(std::move(r));
  }
  {
    ScenarioReport r;
    r.strategy = "2: 1->2, then 1->3 on one copy";
    r.stages = {{2, 1}, {3, 3}};
    r.fidelities.push_back(entry("computation 1 copy", fidelity_single(1, 2, 2), demand_one));
    Rational second = fidelity_from_shrink(bem_shrink(1, 2, 2) * bem_shrink(1, 3, 2), 2);
    r.fidelities.push_back(entry("computation 2 copies (x3)", second, demand_three));
    r.note = "the kept copy is good, but recloning the other only reaches 37/54";
    reports.push_back(std::move(r));
  }
  {
    ScenarioReport r;
    r.strategy = "3: asymmetric 1->2, then 1->3 on the partner";
    r.stages = {{2, 1}, {3, 3}};
    FidelityEntry first;
    first.label = "computation 1 copy";
    first.exact = Rational(7, 9);
    first.value = 7.0 / 9.0;
    first.provenance = Provenance::kRecordedConstant;
    first.threshold = demand_one;
    first.meets_threshold = true;
    r.fidelities.push_back(std::move(first));

    // Optimal partner fidelity of the asymmetric machine when one side is
    // pinned to 7/9, and the input fidelity a 1->3 stage would need to
    // deliver three copies at 79/108.
    FidelityEntry partner;
    partner.label = "asymmetric partner copy";
    partner.value = (11.0 + 2.0 * std::sqrt(6.0)) / 18.0;
    partner.provenance = Provenance::kRecordedConstant;
    partner.threshold = Rational(11, 12);
    partner.meets_threshold = partner.value >= partner.threshold->to_double();
    r.fidelities.push_back(std::move(partner));
    r.note = "partner copy ((11+2*sqrt(6))/18 ~ 0.883) is below the 11/12 needed "
             "to feed the 1->3 stage";
    reports.push_back(std::move(r));
  }
  {
    ScenarioReport r;
    r.strategy = "4: 1->3, keep two, then 2->3";
    r.stages = {{3, 2}, {3, 3}};
    r.fidelities.push_back(entry("computation 1 copy", fidelity_single(1, 3, 2), demand_one));
    Rational second = fidelity_from_shrink(bem_shrink(1, 3, 2) * bem_shrink(2, 3, 2), 2);
    r.fidelities.push_back(entry("computation 2 copies (x3)", second, demand_three));
    r.note = "cloning the kept two-copy mixed state needs the symmetric-subspace machine";
    reports.push_back(std::move(r));
  }

  for (ScenarioReport& r : reports) {
    r.passes_all = true;
    for (const FidelityEntry& e : r.fidelities) {
      if (e.meets_threshold.has_value() && !*e.meets_threshold) r.passes_all = false;
    }
  }
  return reports;
}

}  // namespace symclone
