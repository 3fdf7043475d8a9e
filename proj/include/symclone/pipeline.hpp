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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symclone/cloner.hpp"
#include "symclone/states.hpp"

namespace symclone {

// Reduced state of `keep` systems out of N; symmetric states reduce to
// symmetric states, so the result stays in occupation-vector form.
SymDensity partial_keep(const SymDensity& rho, int keep);

// One cascade stage: clone the kept state up to `target` copies, then hand
// `keep` of them to the next stage (consumed copies are traced out, never
// measured).
struct StagePlan {
  int target = 0;
  int keep = 0;
};

// Compact plan strings like "3:keep2,3"; a stage without a keep clause
// keeps every copy.
std::vector<StagePlan> parse_stage_plan(const std::string& text);

struct CascadeStage {
  int input_copies = 0;
  int target = 0;
  int keep = 0;
  double per_copy_fidelity = 0.0;
  // Cumulative shrinking factor of the stage output relative to the
  // reference, with the fit residual.
  std::optional<double> shrink;
  double shrink_residual = 0.0;
  // Product-of-BEM-bounds prediction; carried exactly when the cascade
  // started from identical pure copies.
  std::optional<Rational> predicted_fidelity;
};

struct CascadeReport {
  int d = 0;
  bool pure_input = false;
  std::vector<CascadeStage> stages;
};

// Runs the staged cloning pipeline. The reference pure state is what
// per-copy fidelities are measured against; it is mandatory because every
// stage reports a fidelity.
CascadeReport cascade(const SymDensity& initial, const PureState& reference,
                      const std::vector<StagePlan>& plan);

// Identical pure copies as input; the input is its own reference and exact
// rational predictions are attached per stage.
CascadeReport cascade(const PureState& x, int copies, const std::vector<StagePlan>& plan);

enum class Provenance { kComputed, kRecordedConstant };

struct FidelityEntry {
  std::string label;
  std::optional<Rational> exact;  // absent for irrational recorded constants
  double value = 0.0;
  Provenance provenance = Provenance::kComputed;
  std::optional<Rational> threshold;
  std::optional<bool> meets_threshold;
};

struct ScenarioReport {
  std::string strategy;
  int d = 2;
  std::vector<StagePlan> stages;
  std::vector<FidelityEntry> fidelities;
  bool passes_all = false;
  std::string note;
};

// The four ways of producing one copy at fidelity >= 7/9 plus three copies
// at fidelity >= 79/108 from a single unknown qubit; only the last one
// meets both demands.
std::vector<ScenarioReport> run_strategy_comparison();

// ((d-1) f + 1) / d: single-copy fidelity of a pure state shrunk by f.
Rational fidelity_from_shrink(const Rational& f, int d);

}  // namespace symclone
