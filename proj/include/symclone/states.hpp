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

#include <Eigen/Dense>

#include "symclone/symbasis.hpp"

namespace symclone {

// Density operator on the symmetric subspace of M d-level systems,
// addressed by occupation-vector ranks. States with support outside the
// symmetric subspace are unrepresentable by construction.
class SymDensity {
public:
  SymDensity(int d, int M);
  SymDensity(int d, int M, Eigen::MatrixXcd lambda);

  int d() const { return d_; }
  int M() const { return M_; }
  std::int64_t dim() const { return lambda_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return lambda_; }
  Eigen::MatrixXcd& matrix() { return lambda_; }

  // Rank-one density from coefficients over the symmetric basis.
  static SymDensity pure(int d, int M, const Eigen::VectorXcd& coeffs);

private:
  int d_;
  int M_;
  Eigen::MatrixXcd lambda_;
};

// Single d-level system density matrix in the computational basis.
struct QuditDensity {
  Eigen::MatrixXcd mat;

  int dim() const { return static_cast<int>(mat.rows()); }
};

struct PureState {
  Eigen::VectorXcd amp;

  int dim() const { return static_cast<int>(amp.size()); }
};

// Throws DimensionError if the squared norm deviates from 1 by more than tol.
void require_normalized(const PureState& x, double tol = 1e-12);

// Coefficients of |x>^{(x) M} over the symmetric basis:
// sqrt(M!) * prod_i x_i^{m_i} / sqrt(m_i!) on |m>.
Eigen::VectorXcd pure_power(const PureState& x, int M);

// Convenience: density of M identical copies of x.
SymDensity pure_power_density(const PureState& x, int M);

// Closed-form reduced density operator of a single system: diagonal entries
// pick up lambda_{m,m} m_i / M, off-diagonal (i,j) entries pick up
// lambda_{m,m'} sqrt(m_i (m_j+1)) / M over pairs with m' = m - e_i + e_j.
QuditDensity reduce_single(const SymDensity& rho);

// <x| sigma |x>, real within 1e-12 and clipped to [0,1]; excursions past
// the 1e-10 slack are an error.
double fidelity_pure(const QuditDensity& sigma, const PureState& x);

struct DensityTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double min_eigenvalue = -1e-10;
};

struct DensityDiagnostics {
  double hermiticity_deviation = 0.0;  // max |lambda - lambda^dag| entry
  double trace_deviation = 0.0;        // |tr - 1|
  double min_eigenvalue = 0.0;
  bool pass = false;
};

DensityDiagnostics validate_density(const Eigen::MatrixXcd& mat,
                                    const DensityTolerances& tol = {});
DensityDiagnostics validate_density(const SymDensity& rho, const DensityTolerances& tol = {});
DensityDiagnostics validate_density(const QuditDensity& rho, const DensityTolerances& tol = {});

}  // namespace symclone
