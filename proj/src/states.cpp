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

#include "symclone/states.hpp"

#include <cmath>

#include "symclone/rational.hpp"

namespace symclone {

namespace {

// std::pow on complex arguments goes through exp/log and turns 0^0 into NaN.
std::complex<double> ipow(const std::complex<double>& base, int e) {
  std::complex<double> r = 1.0;
  for (int t = 0; t < e; ++t) r *= base;
  return r;
}

}  // namespace

SymDensity::SymDensity(int d, int M) : d_(d), M_(M) {
  std::int64_t size = dim_sym(d, M);
  lambda_ = Eigen::MatrixXcd::Zero(size, size);
}

SymDensity::SymDensity(int d, int M, Eigen::MatrixXcd lambda) : d_(d), M_(M) {
  std::int64_t size = dim_sym(d, M);
  if (lambda.rows() != size || lambda.cols() != size) {
    throw DimensionError("symmetric density for (d=" + std::to_string(d) + ", M=" +
                         std::to_string(M) + ") must be " + std::to_string(size) + "x" +
                         std::to_string(size));
  }
  lambda_ = std::move(lambda);
}

SymDensity SymDensity::pure(int d, int M, const Eigen::VectorXcd& coeffs) {
  if (coeffs.size() != dim_sym(d, M)) {
    throw DimensionError("coefficient vector does not match symmetric basis size");
  }
  return SymDensity(d, M, coeffs * coeffs.adjoint());
}

void require_normalized(const PureState& x, double tol) {
  if (x.dim() < 1) throw DimensionError("pure state needs d >= 1");
  if (std::abs(x.amp.squaredNorm() - 1.0) > tol) {
    throw DimensionError("pure state is not normalized");
  }
}

Eigen::VectorXcd pure_power(const PureState& x, int M) {
  require_normalized(x);
  if (M < 1) throw DimensionError("pure_power requires M >= 1");
  const int d = x.dim();
  SymBasis basis(d, M);
  const double root_mfact = std::sqrt(static_cast<double>(factorial(M)));

  Eigen::VectorXcd coeffs(basis.size());
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    const Occupation& m = basis.at(r);
    std::complex<double> c = root_mfact;
    for (int i = 0; i < d; ++i) {
      int mi = m.counts[static_cast<std::size_t>(i)];
      c *= ipow(x.amp[i], mi) / std::sqrt(static_cast<double>(factorial(mi)));
    }
    coeffs[r] = c;
  }
  return coeffs;
}

SymDensity pure_power_density(const PureState& x, int M) {
  return SymDensity::pure(x.dim(), M, pure_power(x, M));
}

QuditDensity reduce_single(const SymDensity& rho) {
  const int d = rho.d();
  const int M = rho.M();
  if (M < 1) throw DimensionError("reduce_single requires M >= 1");
  SymBasis basis(d, M);
  const Eigen::MatrixXcd& lam = rho.matrix();

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    const Occupation& m = basis.at(r);
    for (int i = 0; i < d; ++i) {
      int mi = m.counts[static_cast<std::size_t>(i)];
      if (mi == 0) continue;
      out(i, i) += lam(r, r) * (static_cast<double>(mi) / M);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        Occupation mp = m;
        --mp.counts[static_cast<std::size_t>(i)];
        ++mp.counts[static_cast<std::size_t>(j)];
        std::int64_t rp = basis.rank_of(mp);
        int mj = m.counts[static_cast<std::size_t>(j)];
        out(i, j) += lam(r, rp) * (std::sqrt(static_cast<double>(mi) * (mj + 1)) / M);
      }
    }
  }
  return QuditDensity{std::move(out)};
}

double fidelity_pure(const QuditDensity& sigma, const PureState& x) {
  require_normalized(x);
  if (sigma.dim() != x.dim()) {
    throw DimensionError("fidelity_pure: state and density dimensions differ");
  }
  std::complex<double> v = x.amp.adjoint() * sigma.mat * x.amp;
  if (std::abs(v.imag()) > 1e-12) {
    throw DimensionError("fidelity_pure: expectation value is not real");
  }
  double f = v.real();
  if (f < -1e-10 || f > 1.0 + 1e-10) {
    throw DimensionError("fidelity_pure: value " + std::to_string(f) + " outside [0,1]");
  }
  return std::min(1.0, std::max(0.0, f));
}

DensityDiagnostics validate_density(const Eigen::MatrixXcd& mat, const DensityTolerances& tol) {
  DensityDiagnostics diag;
  diag.hermiticity_deviation = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  diag.trace_deviation = std::abs(mat.trace() - std::complex<double>(1.0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver((mat + mat.adjoint()) / 2.0);
  diag.min_eigenvalue = solver.eigenvalues().minCoeff();
  diag.pass = diag.hermiticity_deviation <= tol.hermiticity &&
              diag.trace_deviation <= tol.trace && diag.min_eigenvalue >= tol.min_eigenvalue;
  return diag;
}

DensityDiagnostics validate_density(const SymDensity& rho, const DensityTolerances& tol) {
  return validate_density(rho.matrix(), tol);
}

DensityDiagnostics validate_density(const QuditDensity& rho, const DensityTolerances& tol) {
  return validate_density(rho.mat, tol);
}

}  // namespace symclone
