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

#include <cstdint>
#include <string>
#include <vector>

#include "symclone/randomgen.hpp"

namespace symclone {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_deviation = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  // Perturbs one cloning amplitude by 1e-3 to prove the suite notices;
  // a run with this flag must fail.
  bool inject_fault = false;
};

// Runs the whole property grid; results are sorted by check name and the
// seed only changes the random instances, never the verdicts.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace symclone
