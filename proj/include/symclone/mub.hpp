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

#include <vector>

#include "symclone/cloner.hpp"
#include "symclone/rational.hpp"
#include "symclone/states.hpp"

namespace symclone {

bool is_prime(int n);

// The d+1 mutually unbiased bases of a prime-dimensional system. Basis 0 is
// the standard basis; each basis is a unitary whose columns are the states.
struct MubFamily {
  int d = 0;
  std::vector<Eigen::MatrixXcd> bases;

  PureState state(int basis, int t) const;  // 0-based indices
};

// Constructs the family and verifies orthonormality and pairwise
// unbiasedness at construction. d must be prime. For d >= 3 the states are
//   |psi_t^k> = 1/sqrt(d) sum_j omega^{t(d-j)} omega^{-k s_j} |j>,
// with s_j = j + (j+1) + ... + (d-1) and s_d = 0; d = 2 uses the standard
// X/Y bases since the phase formula only produces real signs there.
MubFamily mub_family(int d);

struct MubCloneDecomposition {
  int basis = 0;  // family basis the input was located in
  int state = 0;
  // weights[0] is the doubly-occupied |2 psi> branch, then one weight per
  // companion state of the same basis in column order.
  std::vector<double> weights;
  double weight_sum = 0.0;
  // Frobenius distance between the cloned output and the weighted sum of
  // branch projectors.
  double reconstruction_residual = 0.0;
};

// Clones psi 1 -> 2 and decomposes the output over the branches
// |2 psi> and |psi, psi_t'> of its own basis.
MubCloneDecomposition clone_mub_state(const PureState& psi, const MubFamily& family);
MubCloneDecomposition clone_mub_state(const PureState& psi, int d);

struct QkdAttackReport {
  int d = 0;
  int states_checked = 0;
  double min_fidelity = 0.0;
  double max_fidelity = 0.0;
  double mean_fidelity = 0.0;
  Rational analytic_fidelity;   // (d+3) / (2(d+1))
  Rational analytic_error_rate; // (d-1) / (2(d+1))
};

// Individual attack on a (d+1)-basis key distribution protocol: clones every
// state of every basis 1 -> 2 and reports the receiver-copy fidelity.
QkdAttackReport qkd_attack_report(int d);

}  // namespace symclone
