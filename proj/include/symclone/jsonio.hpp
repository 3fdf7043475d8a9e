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

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "symclone/states.hpp"

namespace symclone {

// Deterministic serialization: insertion-ordered keys, floating-point
// values at 17 significant digits so parsed doubles round-trip bit-exactly.
std::string dump_json17(const nlohmann::ordered_json& value, int indent = 2);

// State format shared with the CLI:
//   { "d": int, "M": int, "entries": [ { "m": [...], "mp": [...],
//     "re": float, "im": float } ] }
// listing the non-zero upper triangle plus diagonal in rank order;
// omitted entries are zero and Hermitian completion is implicit.
nlohmann::ordered_json state_to_json(const SymDensity& rho);
SymDensity state_from_json(const nlohmann::json& j);

SymDensity read_state_file(const std::string& path);
SymDensity parse_state_text(const std::string& text);

// CSV flattening with the JSON schema field names: m,mp,re,im rows,
// occupation vectors quoted as space-separated counts.
std::string state_to_csv(const SymDensity& rho);

// Inline amplitude lists like "1,0", "0.6,0.8i", "0.5+0.5i,0,0.5-0.5i".
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

}  // namespace symclone
