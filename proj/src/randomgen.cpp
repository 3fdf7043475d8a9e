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

#include "symclone/randomgen.hpp"

namespace symclone {

namespace {

Eigen::MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
    }
  }
  return g;
}

}  // namespace

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

PureState random_pure(int d, std::mt19937_64& rng) {
  if (d < 1) throw DimensionError("random_pure requires d >= 1");
  Eigen::VectorXcd amp = ginibre(d, 1, rng);
  amp.normalize();
  return PureState{std::move(amp)};
}

SymDensity random_density(int d, int M, std::mt19937_64& rng) {
  std::int64_t size = dim_sym(d, M);
  Eigen::MatrixXcd g = ginibre(size, size, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  // Bit-exact conjugate symmetry, independent of the product kernel.
  Eigen::MatrixXcd adj = rho.adjoint();
  rho = (rho + adj) / 2.0;
  rho /= rho.trace().real();
  return SymDensity(d, M, std::move(rho));
}

Eigen::MatrixXcd random_unitary(int d, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(d, d, rng));
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    std::complex<double> diag = r(i, i);
    q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

}  // namespace symclone
