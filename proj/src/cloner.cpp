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

#include "symclone/cloner.hpp"

#include <cmath>
#include <string>

namespace symclone {

namespace {

void require_clone_dims(int d, int M, int N) {
  if (d < 1) throw DimensionError("cloning requires d >= 1");
  if (M < 1) throw DimensionError("cloning requires M >= 1");
  if (N < M) throw DimensionError("cloning requires N >= M");
  if (N + d > 21) {
    throw ScaleError("cloning with N+d = " + std::to_string(N + d) +
                     " exceeds the exact 64-bit range (limit N+d <= 21)");
  }
}

Rational eta_squared_for(int d, int M, int N) {
  // (N-M)! (M+d-1)! / (N+d-1)!  ==  (N-M)! / prod_{t=M+d}^{N+d-1} t
  Rational eta2(factorial(N - M), 1);
  for (int t = M + d; t <= N + d - 1; ++t) eta2 = eta2 / Rational(t, 1);
  return eta2;
}

Rational multiset_product(const Occupation& m, const Occupation& k) {
  Rational p(1);
  for (int i = 0; i < m.levels(); ++i) {
    p = p * Rational(binomial(m.counts[static_cast<std::size_t>(i)] +
                                  k.counts[static_cast<std::size_t>(i)],
                              k.counts[static_cast<std::size_t>(i)]),
                     1);
  }
  return p;
}

Occupation add_occupations(const Occupation& m, const Occupation& k) {
  Occupation sum = m;
  for (int i = 0; i < m.levels(); ++i) {
    sum.counts[static_cast<std::size_t>(i)] += k.counts[static_cast<std::size_t>(i)];
  }
  return sum;
}

int checked_clone_d(int d, int M, int N) {
  require_clone_dims(d, M, N);
  return d;
}

}  // namespace

CloneMap::CloneMap(int d, int M, int N)
    : d_(d), M_(M), N_(N), inputs_(checked_clone_d(d, M, N), M), ancillas_(d, N - M),
      outputs_(d, N), eta2_(eta_squared_for(d, M, N)) {
  alpha_.resize(inputs_.size(), ancillas_.size());
  for (std::int64_t r = 0; r < inputs_.size(); ++r) {
    for (std::int64_t c = 0; c < ancillas_.size(); ++c) {
      Rational a2 = eta2_ * multiset_product(inputs_.at(r), ancillas_.at(c));
      alpha_(r, c) = std::sqrt(a2.to_double());
    }
  }
}

double CloneMap::amplitude(std::int64_t m_rank, std::int64_t k_rank) const {
  if (m_rank < 0 || m_rank >= inputs_.size() || k_rank < 0 || k_rank >= ancillas_.size()) {
    throw DimensionError("amplitude rank out of range");
  }
  return alpha_(m_rank, k_rank);
}

double CloneMap::amplitude(const Occupation& m, const Occupation& k) const {
  return alpha_(inputs_.rank_of(m), ancillas_.rank_of(k));
}

Rational CloneMap::amplitude_squared(const Occupation& m, const Occupation& k) const {
  inputs_.rank_of(m);
  ancillas_.rank_of(k);
  return eta2_ * multiset_product(m, k);
}

CloneMap CloneMap::perturbed(std::int64_t m_rank, std::int64_t k_rank, double delta) const {
  CloneMap copy = *this;
  copy.alpha_(m_rank, k_rank) += delta;
  return copy;
}

SymDensity clone_state(const CloneMap& map, const SymDensity& rho) {
  if (rho.d() != map.d() || rho.M() != map.M()) {
    throw DimensionError("clone map and input state dimensions differ");
  }
  const SymBasis& inputs = map.input_basis();
  const SymBasis& ancillas = map.ancilla_basis();
  const SymBasis& outputs = map.output_basis();
  const Eigen::MatrixXcd& lam = rho.matrix();

  // Precompute the output rank of m+k for every (m, k) pair.
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> sum_rank(inputs.size(),
                                                                       ancillas.size());
  for (std::int64_t r = 0; r < inputs.size(); ++r) {
    for (std::int64_t c = 0; c < ancillas.size(); ++c) {
      sum_rank(r, c) = outputs.rank_of(add_occupations(inputs.at(r), ancillas.at(c)));
    }
  }

  SymDensity out(map.d(), map.N());
  Eigen::MatrixXcd& lam_out = out.matrix();
  for (std::int64_t r = 0; r < inputs.size(); ++r) {
    for (std::int64_t rp = 0; rp < inputs.size(); ++rp) {
      const std::complex<double> v = lam(r, rp);
      if (v == std::complex<double>(0.0)) continue;
      for (std::int64_t c = 0; c < ancillas.size(); ++c) {
        lam_out(sum_rank(r, c), sum_rank(rp, c)) += v * map.table()(r, c) * map.table()(rp, c);
      }
    }
  }
  return out;
}

SymDensity clone_state(const SymDensity& rho, int N) {
  return clone_state(CloneMap(rho.d(), rho.M(), N), rho);
}

QuditDensity reduced_output(const CloneMap& map, const SymDensity& rho) {
  if (rho.d() != map.d() || rho.M() != map.M()) {
    throw DimensionError("clone map and input state dimensions differ");
  }
  const int d = map.d();
  const int N = map.N();
  const SymBasis& inputs = map.input_basis();
  const SymBasis& ancillas = map.ancilla_basis();
  const Eigen::MatrixXcd& lam = rho.matrix();

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (std::int64_t r = 0; r < inputs.size(); ++r) {
    const Occupation& m = inputs.at(r);
    for (std::int64_t c = 0; c < ancillas.size(); ++c) {
      const Occupation& k = ancillas.at(c);
      const double a2 = map.table()(r, c) * map.table()(r, c);
      for (int i = 0; i < d; ++i) {
        out(i, i) += lam(r, r) * a2 *
                     (static_cast<double>(m.counts[static_cast<std::size_t>(i)] +
                                          k.counts[static_cast<std::size_t>(i)]) /
                      N);
      }
    }
  }
  // Off-diagonal (i, j) couples input pairs with m' = m - e_i + e_j through
  // the shared ancilla label k.
  for (std::int64_t r = 0; r < inputs.size(); ++r) {
    const Occupation& m = inputs.at(r);
    for (int i = 0; i < d; ++i) {
      if (m.counts[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        Occupation mp = m;
        --mp.counts[static_cast<std::size_t>(i)];
        ++mp.counts[static_cast<std::size_t>(j)];
        const std::int64_t rp = inputs.rank_of(mp);
        std::complex<double> acc = 0.0;
        for (std::int64_t c = 0; c < ancillas.size(); ++c) {
          const Occupation& k = ancillas.at(c);
          const double mi = m.counts[static_cast<std::size_t>(i)] +
                            k.counts[static_cast<std::size_t>(i)];
          const double mj = m.counts[static_cast<std::size_t>(j)] +
                            k.counts[static_cast<std::size_t>(j)];
          acc += lam(r, rp) * map.table()(r, c) * map.table()(rp, c) *
                 (std::sqrt(mi * (mj + 1.0)) / N);
        }
        out(i, j) += acc;
      }
    }
  }
  return QuditDensity{std::move(out)};
}

QuditDensity reduced_output(const SymDensity& rho, int N) {
  return reduced_output(CloneMap(rho.d(), rho.M(), N), rho);
}

Rational bem_shrink(int M, int N, int d) {
  if (d < 2) throw DimensionError("shrinking factor requires d >= 2");
  if (M < 1 || N < M) throw DimensionError("shrinking factor requires N >= M >= 1");
  return Rational(checked_mul(M, N + d), checked_mul(N, M + d));
}

ShrinkReport extract_shrink(const QuditDensity& sigma_in, const QuditDensity& sigma_out) {
  if (sigma_in.dim() != sigma_out.dim()) {
    throw DimensionError("extract_shrink: dimension mismatch");
  }
  const int d = sigma_in.dim();
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd tau_in = sigma_in.mat - id / d;
  Eigen::MatrixXcd tau_out = sigma_out.mat - id / d;

  ShrinkReport report;
  const double norm_in = tau_in.norm();
  if (norm_in < 1e-12) {
    report.degenerate = true;
    report.residual = tau_out.norm();
    return report;
  }
  const double f =
      (tau_in.conjugate().cwiseProduct(tau_out)).sum().real() / (norm_in * norm_in);
  report.factor = f;
  report.residual = (tau_out - f * tau_in).norm();
  return report;
}

Rational fidelity_single(int M, int N, int d) {
  if (d < 2) throw DimensionError("fidelity_single requires d >= 2");
  if (M < 1 || N < M) throw DimensionError("fidelity_single requires N >= M >= 1");
  return Rational(checked_add(checked_mul(M, N + d), N - M), checked_mul(N, M + d));
}

Rational fidelity_global(int M, int N, int d) {
  if (d < 1) throw DimensionError("fidelity_global requires d >= 1");
  if (M < 1 || N < M) throw DimensionError("fidelity_global requires N >= M >= 1");
  // N! / M!  over  (N+d-1)! / (M+d-1)!
  Rational f(1);
  for (int t = M + 1; t <= N; ++t) f = f * Rational(t, 1);
  for (int t = M + d; t <= N + d - 1; ++t) f = f / Rational(t, 1);
  return f;
}

SumIdentityCheck check_sum_identity(const Occupation& m, int j, int N) {
  require_occupation(m);
  const int d = m.levels();
  const int M = m.total();
  if (j < 1 || j > d) throw DimensionError("level index j must be in 1..d");
  if (N < M) throw DimensionError("check_sum_identity requires N >= M");

  SumIdentityCheck check;
  for (const Occupation& k : enumerate_occupations(d, N - M)) {
    std::int64_t term = m.counts[static_cast<std::size_t>(j - 1)] +
                        k.counts[static_cast<std::size_t>(j - 1)] + 1;
    for (int l = 0; l < d; ++l) {
      term = checked_mul(term, binomial(m.counts[static_cast<std::size_t>(l)] +
                                            k.counts[static_cast<std::size_t>(l)],
                                        k.counts[static_cast<std::size_t>(l)]));
    }
    check.lhs = checked_add(check.lhs, term);
  }
  // (m_j+1) (N+d)! / ((N-M)! (M+d)!)  =  (m_j+1) C(N+d, N-M)
  check.rhs = checked_mul(m.counts[static_cast<std::size_t>(j - 1)] + 1,
                          binomial(N + d, N - M));
  check.pass = check.lhs == check.rhs;
  return check;
}

}  // namespace symclone
