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

#include "symclone/mub.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace symclone {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

PureState MubFamily::state(int basis, int t) const {
  if (basis < 0 || basis >= static_cast<int>(bases.size()) || t < 0 || t >= d) {
    throw DimensionError("MUB state index out of range");
  }
  return PureState{bases[static_cast<std::size_t>(basis)].col(t)};
}

namespace {

// Coefficients over the (d, 2) symmetric basis of the normalized
// symmetrization of psi (x) phi.
Eigen::VectorXcd symmetrized_pair(const PureState& psi, const PureState& phi) {
  const int d = psi.dim();
  if (phi.dim() != d) throw DimensionError("symmetrized pair dimension mismatch");
  SymBasis basis(d, 2);
  Eigen::VectorXcd c(basis.size());
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    const Occupation& m = basis.at(r);
    int i = -1, j = -1;
    for (int l = 0; l < d; ++l) {
      if (m.counts[static_cast<std::size_t>(l)] == 2) i = j = l;
      if (m.counts[static_cast<std::size_t>(l)] == 1) (i < 0 ? i : j) = l;
    }
    if (i == j) {
      c[r] = psi.amp[i] * phi.amp[i];
    } else {
      c[r] = (psi.amp[i] * phi.amp[j] + psi.amp[j] * phi.amp[i]) / std::sqrt(2.0);
    }
  }
  c.normalize();
  return c;
}

}  // namespace

MubFamily mub_family(int d) {
  if (!is_prime(d)) throw DimensionError("d must be prime for the MUB construction");

  MubFamily family;
  family.d = d;
  family.bases.push_back(Eigen::MatrixXcd::Identity(d, d));

  if (d == 2) {
    Eigen::MatrixXcd x_basis(2, 2), y_basis(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    x_basis << r, r, r, -r;
    y_basis << r, r, std::complex<double>(0, r), std::complex<double>(0, -r);
    family.bases.push_back(x_basis);
    family.bases.push_back(y_basis);
  } else {
    // s_j = j + (j+1) + ... + (d-1); the empty sum at j = d is 0.
    std::vector<long> s(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 1; j < d; ++j) {
      s[static_cast<std::size_t>(j)] = static_cast<long>(j + d - 1) * (d - j) / 2;
    }
    const double root_d = std::sqrt(static_cast<double>(d));
    for (int k = 1; k <= d; ++k) {
      Eigen::MatrixXcd basis(d, d);
      for (int t = 1; t <= d; ++t) {
        for (int j = 1; j <= d; ++j) {
          // omega^{t(d-j)} omega^{-k s_j} with omega = exp(2 pi i / d)
          long exponent = static_cast<long>(t) * (d - j) -
                          static_cast<long>(k) * s[static_cast<std::size_t>(j)];
          long r = exponent % d;
          if (r < 0) r += d;
          basis(j - 1, t - 1) = std::polar(1.0 / root_d, 2.0 * std::numbers::pi * r / d);
        }
      }
      family.bases.push_back(basis);
    }
  }

  // Construction bug guard: orthonormality and pairwise unbiasedness.
  for (const Eigen::MatrixXcd& b : family.bases) {
    double dev = (b.adjoint() * b - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > 1e-12) throw DimensionError("MUB basis failed orthonormality check");
  }
  for (std::size_t a = 0; a < family.bases.size(); ++a) {
    for (std::size_t b = a + 1; b < family.bases.size(); ++b) {
      Eigen::MatrixXcd overlap = family.bases[a].adjoint() * family.bases[b];
      double dev = (overlap.cwiseAbs2().array() - 1.0 / d).abs().maxCoeff();
      if (dev > 1e-10) throw DimensionError("MUB bases failed unbiasedness check");
    }
  }
  return family;
}

MubCloneDecomposition clone_mub_state(const PureState& psi, const MubFamily& family) {
  const int d = family.d;
  if (psi.dim() != d) throw DimensionError("state dimension does not match family");
  require_normalized(psi);

  int located_basis = -1, located_state = -1;
  for (std::size_t b = 0; b < family.bases.size() && located_basis < 0; ++b) {
    for (int t = 0; t < d; ++t) {
      std::complex<double> ov = family.bases[b].col(t).dot(psi.amp);
      if (std::abs(std::abs(ov) - 1.0) <= 1e-10) {
        located_basis = static_cast<int>(b);
        located_state = t;
        break;
      }
    }
  }
  if (located_basis < 0) {
    throw DimensionError("state is not a member of the MUB family (within 1e-10)");
  }

  SymDensity out = clone_state(pure_power_density(psi, 1), 2);

  MubCloneDecomposition decomp;
  decomp.basis = located_basis;
  decomp.state = located_state;

  const Eigen::MatrixXcd& basis = family.bases[static_cast<std::size_t>(located_basis)];
  std::vector<Eigen::VectorXcd> branches;
  branches.push_back(pure_power(psi, 2));
  for (int tp = 0; tp < d; ++tp) {
    if (tp == located_state) continue;
    branches.push_back(symmetrized_pair(psi, PureState{basis.col(tp)}));
  }

  Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(out.dim(), out.dim());
  for (const Eigen::VectorXcd& branch : branches) {
    std::complex<double> w = branch.adjoint() * out.matrix() * branch;
    decomp.weights.push_back(w.real());
    decomp.weight_sum += w.real();
    recon += w.real() * (branch * branch.adjoint());
  }
  decomp.reconstruction_residual = (out.matrix() - recon).norm();
  return decomp;
}

MubCloneDecomposition clone_mub_state(const PureState& psi, int d) {
  return clone_mub_state(psi, mub_family(d));
}

QkdAttackReport qkd_attack_report(int d) {
  MubFamily family = mub_family(d);
  CloneMap map(d, 1, 2);

  QkdAttackReport report;
  report.d = d;
  report.analytic_fidelity = Rational(d + 3, 2 * (d + 1));
  report.analytic_error_rate = Rational(d - 1, 2 * (d + 1));

  double sum = 0.0;
  for (std::size_t b = 0; b < family.bases.size(); ++b) {
    for (int t = 0; t < d; ++t) {
      PureState psi = family.state(static_cast<int>(b), t);
      double f = fidelity_pure(reduced_output(map, pure_power_density(psi, 1)), psi);
      if (report.states_checked == 0) {
        report.min_fidelity = report.max_fidelity = f;
      } else {
        report.min_fidelity = std::min(report.min_fidelity, f);
        report.max_fidelity = std::max(report.max_fidelity, f);
      }
      sum += f;
      ++report.states_checked;
    }
  }
  report.mean_fidelity = sum / report.states_checked;
  return report;
}

}  // namespace symclone
