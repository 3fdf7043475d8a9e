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
#include <random>

#include "symclone/states.hpp"

namespace symclone {

// Seeded generators for the randomized verification grid. A fixed default
// seed keeps runs reproducible; failures report the seed that was used.
inline constexpr std::uint64_t kDefaultSeed = 12345;

std::mt19937_64 make_rng(std::uint64_t seed = kDefaultSeed);

PureState random_pure(int d, std::mt19937_64& rng);

// Ginibre construction G G^dag / tr: Hermitian, unit trace, full rank PSD.
SymDensity random_density(int d, int M, std::mt19937_64& rng);

// Haar-distributed via QR of a Ginibre matrix with phase correction.
Eigen::MatrixXcd random_unitary(int d, std::mt19937_64& rng);

}  // namespace symclone
