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
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "symclone/errors.hpp"

namespace symclone {

// Occupation numbers of a symmetric (Dicke-type) basis state: counts[i] is
// how many of the systems sit in level i. The basis of the symmetric
// subspace of `total()` d-level systems is the set of all such vectors.
struct Occupation {
  std::vector<int> counts;

  int levels() const { return static_cast<int>(counts.size()); }
  int total() const;

  friend bool operator==(const Occupation& a, const Occupation& b) = default;
};

// Throws DimensionError unless m has d >= 1 and all counts >= 0.
void require_occupation(const Occupation& m);

// Dimension of the symmetric subspace of M d-level systems,
// (M+d-1)! / (M! (d-1)!), computed exactly with overflow detection.
std::int64_t dim_sym(int d, int M);

// All occupation vectors for (d, M) in canonical order: descending
// lexicographic on counts, so (M,0,...,0) is rank 0 and (0,...,0,M) last.
std::vector<Occupation> enumerate_occupations(int d, int M);

// Rank of m in the canonical order; inverse of unrank_occupation.
std::int64_t rank_occupation(const Occupation& m);
Occupation unrank_occupation(int d, int M, std::int64_t rank);

// Cached enumeration for a fixed (d, M); rank lookups are O(log D).
class SymBasis {
public:
  SymBasis(int d, int M);

  int d() const { return d_; }
  int M() const { return M_; }
  std::int64_t size() const { return static_cast<std::int64_t>(states_.size()); }
  const Occupation& at(std::int64_t rank) const { return states_[static_cast<std::size_t>(rank)]; }
  const std::vector<Occupation>& states() const { return states_; }
  std::int64_t rank_of(const Occupation& m) const;

private:
  int d_;
  int M_;
  std::vector<Occupation> states_;
  std::map<std::vector<int>, std::int64_t> index_;
};

// Entry cap for full tensor-product embeddings (d^M). Default 2^22;
// overridable through the SYMCLONE_ORACLE_BUDGET environment variable.
std::size_t oracle_budget();

// The normalized permutation-symmetric vector for m in the full d^M
// tensor-product space: amplitude sqrt(prod_i m_i! / M!) on each product
// string whose level counts equal m. System 0 is the most significant
// digit of the full-space index.
Eigen::VectorXcd embed_symmetric(const Occupation& m);

}  // namespace symclone
