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

#include "symclone/cloner.hpp"
#include "symclone/states.hpp"

namespace symclone {

// Brute-force verification path: explicit isometry matrices, full
// tensor-product embeddings, and literal partial traces. Exists to be
// obviously correct, not fast.

// Dense matrix of the cloning isometry, mapping the (d, M) symmetric basis
// to clones (x) ancilla; row index is rank(m+k) * dim_k + rank(k).
struct IsometryMatrix {
  int d = 0;
  int M = 0;
  int N = 0;
  Eigen::MatrixXd V;
};

IsometryMatrix build_isometry(int d, int M, int N);

// Conjugates rho by the isometry and traces the ancilla factor by explicit
// index summation.
SymDensity oracle_clone(const SymDensity& rho, int N);

// Embeds rho into the full (d^M)^2 operator via embed_symmetric.
Eigen::MatrixXcd embed_operator(const SymDensity& rho);

// Literal partial trace of the embedded operator over M-1 systems.
QuditDensity oracle_reduce(const SymDensity& rho);

// <x|^{(x)N} rho_out |x>^{(x)N} for the cloned M-fold pure input.
double oracle_global_fidelity(const PureState& x, int M, int N);

// Matrix elements <m| V^{(x)M} |m'> of a product unitary on the symmetric
// basis, evaluated in the full tensor space.
Eigen::MatrixXcd symmetric_product_unitary(const Eigen::MatrixXcd& V, int M);

// rho conjugated by V^{(x)M}, computed through the full-space representation.
SymDensity rotate_state(const SymDensity& rho, const Eigen::MatrixXcd& V);

}  // namespace symclone
