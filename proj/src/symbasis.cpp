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

#include "symclone/symbasis.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "symclone/rational.hpp"

namespace symclone {

int Occupation::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

void require_occupation(const Occupation& m) {
  if (m.levels() < 1) throw DimensionError("occupation vector needs at least one level");
  for (int c : m.counts) {
    if (c < 0) throw DimensionError("occupation counts must be non-negative");
  }
}

std::int64_t dim_sym(int d, int M) {
  if (d < 1) throw DimensionError("dim_sym requires d >= 1");
  if (M < 0) throw DimensionError("dim_sym requires M >= 0");
  return binomial(static_cast<std::int64_t>(M) + d - 1, d - 1);
}

namespace {

void enumerate_into(int d, int M, std::vector<int>& prefix, std::vector<Occupation>& out) {
  if (d == 1) {
    prefix.push_back(M);
    out.push_back(Occupation{prefix});
    prefix.pop_back();
    return;
  }
  for (int c = M; c >= 0; --c) {
    prefix.push_back(c);
    enumerate_into(d - 1, M - c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Occupation> enumerate_occupations(int d, int M) {
  std::int64_t size = dim_sym(d, M);
  std::vector<Occupation> out;
  out.reserve(static_cast<std::size_t>(size));
  std::vector<int> prefix;
  enumerate_into(d, M, prefix, out);
  return out;
}

std::int64_t rank_occupation(const Occupation& m) {
  require_occupation(m);
  const int d = m.levels();
  // Vectors preceding m put a larger count at the first position where they
  // differ; summing the completions below collapses, via the Pascal-type
  // recurrence, to one dim_sym term per position.
  std::int64_t rank = 0;
  int remaining = m.total();
  for (int i = 0; i + 1 < d; ++i) {
    if (remaining - m.counts[i] >= 1) {
      rank = checked_add(rank, dim_sym(d - i, remaining - m.counts[i] - 1));
    }
    remaining -= m.counts[i];
  }
  return rank;
}

Occupation unrank_occupation(int d, int M, std::int64_t rank) {
  std::int64_t size = dim_sym(d, M);
  if (rank < 0 || rank >= size) {
    throw DimensionError("unrank index " + std::to_string(rank) + " out of range for (d=" +
                         std::to_string(d) + ", M=" + std::to_string(M) + ")");
  }
  Occupation m;
  m.counts.reserve(static_cast<std::size_t>(d));
  int remaining = M;
  for (int i = 0; i + 1 < d; ++i) {
    for (int c = remaining; c >= 0; --c) {
      std::int64_t block = dim_sym(d - i - 1, remaining - c);
      if (rank < block) {
        m.counts.push_back(c);
        remaining -= c;
        break;
      }
      rank -= block;
    }
  }
  m.counts.push_back(remaining);
  return m;
}

SymBasis::SymBasis(int d, int M) : d_(d), M_(M), states_(enumerate_occupations(d, M)) {
  std::int64_t r = 0;
  for (const Occupation& m : states_) index_.emplace(m.counts, r++);
}

std::int64_t SymBasis::rank_of(const Occupation& m) const {
  auto it = index_.find(m.counts);
  if (it == index_.end()) {
    throw DimensionError("occupation vector does not belong to basis (d=" + std::to_string(d_) +
                         ", M=" + std::to_string(M_) + ")");
  }
  return it->second;
}

std::size_t oracle_budget() {
  static const std::size_t budget = [] {
    if (const char* env = std::getenv("SYMCLONE_ORACLE_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1) << 22;
  }();
  return budget;
}

Eigen::VectorXcd embed_symmetric(const Occupation& m) {
  require_occupation(m);
  const int d = m.levels();
  const int M = m.total();

  double full = std::pow(static_cast<double>(d), M);
  if (full > static_cast<double>(oracle_budget())) {
    throw ScaleError("embedding of d=" + std::to_string(d) + ", M=" + std::to_string(M) +
                     " exceeds the full-space budget of " + std::to_string(oracle_budget()) +
                     " entries");
  }
  std::size_t size = 1;
  for (int t = 0; t < M; ++t) size *= static_cast<std::size_t>(d);

  Rational weight(1);
  for (int c : m.counts) weight = weight * Rational(factorial(c), 1);
  weight = weight / Rational(factorial(M), 1);
  const double amp = std::sqrt(weight.to_double());

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(size));
  std::vector<int> counts(static_cast<std::size_t>(d), 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t x = idx;
    std::fill(counts.begin(), counts.end(), 0);
    for (int t = M - 1; t >= 0; --t) {
      int dig = static_cast<int>(x % static_cast<std::size_t>(d));
      x /= static_cast<std::size_t>(d);
      ++counts[static_cast<std::size_t>(dig)];
    }
    bool match = true;
    for (int i = 0; i < d; ++i) {
      if (counts[static_cast<std::size_t>(i)] != m.counts[static_cast<std::size_t>(i)]) {
        match = false;
        break;
      }
    }
    if (match) v[static_cast<Eigen::Index>(idx)] = amp;
  }
  return v;
}

}  // namespace symclone
