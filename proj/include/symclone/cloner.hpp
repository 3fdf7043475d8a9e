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

#include "symclone/rational.hpp"
#include "symclone/states.hpp"
#include "symclone/symbasis.hpp"

namespace symclone {

// Amplitude table of the universal M -> N cloning isometry on the symmetric
// subspace of d-level systems. Rows are ranked input occupations m (total M),
// columns ranked ancilla occupations k (total N-M); the entry is
//   alpha_{m,k} = eta * sqrt(prod_i (m_i+k_i)! / (m_i! k_i!)),
//   eta = sqrt((N-M)! (M+d-1)! / (N+d-1)!),
// computed from exact integer ratio products and square-rooted once.
// Exact mode requires N+d <= 21 so every intermediate fits in 64 bits.
class CloneMap {
public:
  CloneMap(int d, int M, int N);

  int d() const { return d_; }
  int M() const { return M_; }
  int N() const { return N_; }
  const SymBasis& input_basis() const { return inputs_; }
  const SymBasis& ancilla_basis() const { return ancillas_; }
  const SymBasis& output_basis() const { return outputs_; }

  const Eigen::MatrixXd& table() const { return alpha_; }
  double amplitude(std::int64_t m_rank, std::int64_t k_rank) const;
  double amplitude(const Occupation& m, const Occupation& k) const;
  Rational amplitude_squared(const Occupation& m, const Occupation& k) const;
  Rational eta_squared() const { return eta2_; }

  // Copy with one table entry offset by delta. Exists so the verification
  // suite can prove its own sensitivity; never used on a real cloning path.
  CloneMap perturbed(std::int64_t m_rank, std::int64_t k_rank, double delta) const;

private:
  int d_;
  int M_;
  int N_;
  SymBasis inputs_;
  SymBasis ancillas_;
  SymBasis outputs_;
  Rational eta2_;
  Eigen::MatrixXd alpha_;
};

// Output density after cloning rho to N systems and tracing the ancillae:
// lambda_out[m+k, m'+k] += lambda[m, m'] alpha_{m,k} alpha_{m',k}.
SymDensity clone_state(const CloneMap& map, const SymDensity& rho);
SymDensity clone_state(const SymDensity& rho, int N);

// Single-copy reduction of the cloned output, evaluated directly from the
// input coefficients without materializing the N-system state.
QuditDensity reduced_output(const CloneMap& map, const SymDensity& rho);
QuditDensity reduced_output(const SymDensity& rho, int N);

// Optimal input-independent shrinking factor M(N+d) / (N(M+d)).
Rational bem_shrink(int M, int N, int d);

struct ShrinkReport {
  std::optional<double> factor;  // absent when the input is maximally mixed
  double residual = 0.0;         // Frobenius norm of tau_out - f tau_in
  bool degenerate = false;
};

// Least-squares fit of sigma_out = (1-f)/d I + f sigma_in on the traceless
// parts; a single factor plus a residual instead of d^2 noisy ratios.
ShrinkReport extract_shrink(const QuditDensity& sigma_in, const QuditDensity& sigma_out);

// Optimal single-copy fidelity (M(N+d) + N - M) / (N(M+d)) for identical
// pure inputs; equals ((d-1) f + 1) / d at the optimal shrinking factor.
Rational fidelity_single(int M, int N, int d);

// Optimal overlap of the whole N-copy output with the ideal copies,
// N! (M+d-1)! / (M! (N+d-1)!).
Rational fidelity_global(int M, int N, int d);

struct SumIdentityCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = false;
};

// Exact enumeration of
//   sum_k prod_l C(m_l+k_l, k_l) (m_j+k_j+1) = (m_j+1) (N+d)! / ((N-M)!(M+d)!)
// over ancilla occupations k with total N-M; j is a 1-based level index.
SumIdentityCheck check_sum_identity(const Occupation& m, int j, int N);

}  // namespace symclone
