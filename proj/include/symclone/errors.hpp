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

#include <stdexcept>
#include <string>

namespace symclone {

// Invalid or mismatched dimensions, indices, or state data.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Requested computation exceeds the exact-arithmetic range or the
// configured full-space embedding budget.
class ScaleError : public std::runtime_error {
public:
  explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unparseable state files, bad inline amplitude lists,
// unknown fields.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symclone
