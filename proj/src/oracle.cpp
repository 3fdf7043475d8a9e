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

#include "symclone/oracle.hpp"

namespace symclone {

IsometryMatrix build_isometry(int d, int M, int N) {
  CloneMap map(d, M, N);
  const SymBasis& inputs = map.input_basis();
  const SymBasis& ancillas = map.ancilla_basis();
  const SymBasis& outputs = map.output_basis();

  IsometryMatrix iso;
  iso.d = d;
  iso.M = M;
  iso.N = N;
  iso.V = Eigen::MatrixXd::Zero(outputs.size() * ancillas.size(), inputs.size());
  for (std::int64_t r = 0; r < inputs.size(); ++r) {
    for (std::int64_t c = 0; c < ancillas.size(); ++c) {
      Occupation sum = inputs.at(r);
      for (int i = 0; i < d; ++i) {
        sum.counts[static_cast<std::size_t>(i)] +=
            ancillas.at(c).counts[static_cast<std::size_t>(i)];
      }
      iso.V(outputs.rank_of(sum) * ancillas.size() + c, r) = map.table()(r, c);
    }
  }
  return iso;
}

SymDensity oracle_clone(const SymDensity& rho, int N) {
  IsometryMatrix iso = build_isometry(rho.d(), rho.M(), N);
  const std::int64_t dim_anc = dim_sym(rho.d(), N - rho.M());
  const std::int64_t dim_out = dim_sym(rho.d(), N);

  Eigen::MatrixXcd sigma = iso.V * rho.matrix() * iso.V.transpose();
  SymDensity out(rho.d(), N);
  for (std::int64_t a = 0; a < dim_out; ++a) {
    for (std::int64_t b = 0; b < dim_out; ++b) {
      std::complex<double> acc = 0.0;
      for (std::int64_t t = 0; t < dim_anc; ++t) {
        acc += sigma(a * dim_anc + t, b * dim_anc + t);
      }
      out.matrix()(a, b) = acc;
    }
  }
  return out;
}

Eigen::MatrixXcd embed_operator(const SymDensity& rho) {
  SymBasis basis(rho.d(), rho.M());
  std::vector<Eigen::VectorXcd> embedded;
  embedded.reserve(static_cast<std::size_t>(basis.size()));
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    embedded.push_back(embed_symmetric(basis.at(r)));
  }
  const Eigen::Index full = embedded.front().size();
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(full, full);
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    for (std::int64_t c = 0; c < basis.size(); ++c) {
      op += rho.matrix()(r, c) * (embedded[static_cast<std::size_t>(r)] *
                                  embedded[static_cast<std::size_t>(c)].adjoint());
    }
  }
  return op;
}

QuditDensity oracle_reduce(const SymDensity& rho) {
  const int d = rho.d();
  const int M = rho.M();
  if (M < 1) throw DimensionError("oracle_reduce requires M >= 1");
  Eigen::MatrixXcd op = embed_operator(rho);

  // Keep system 0 (the most significant digit), trace the other M-1.
  Eigen::Index rest = op.rows() / d;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::complex<double> acc = 0.0;
      for (Eigen::Index r = 0; r < rest; ++r) acc += op(i * rest + r, j * rest + r);
      out(i, j) = acc;
    }
  }
  return QuditDensity{std::move(out)};
}

double oracle_global_fidelity(const PureState& x, int M, int N) {
  SymDensity out = oracle_clone(pure_power_density(x, M), N);
  Eigen::VectorXcd target = pure_power(x, N);
  std::complex<double> f = target.adjoint() * out.matrix() * target;
  return f.real();
}

Eigen::MatrixXcd symmetric_product_unitary(const Eigen::MatrixXcd& V, int M) {
  const int d = static_cast<int>(V.rows());
  if (V.cols() != d) throw DimensionError("product unitary requires a square matrix");
  if (M < 1) throw DimensionError("product unitary requires M >= 1");
  Eigen::MatrixXcd big = V;
  for (int t = 1; t < M; ++t) {
    Eigen::MatrixXcd next(big.rows() * d, big.cols() * d);
    for (Eigen::Index i = 0; i < big.rows(); ++i) {
      for (Eigen::Index j = 0; j < big.cols(); ++j) {
        next.block(i * d, j * d, d, d) = big(i, j) * V;
      }
    }
    big = std::move(next);
  }

  SymBasis basis(d, M);
  std::vector<Eigen::VectorXcd> embedded;
  embedded.reserve(static_cast<std::size_t>(basis.size()));
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    embedded.push_back(embed_symmetric(basis.at(r)));
  }
  Eigen::MatrixXcd W(basis.size(), basis.size());
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    for (std::int64_t c = 0; c < basis.size(); ++c) {
      W(r, c) = embedded[static_cast<std::size_t>(r)].dot(big * embedded[static_cast<std::size_t>(c)]);
    }
  }
  return W;
}

SymDensity rotate_state(const SymDensity& rho, const Eigen::MatrixXcd& V) {
  if (V.rows() != rho.d()) throw DimensionError("rotation dimension mismatch");
  Eigen::MatrixXcd W = symmetric_product_unitary(V, rho.M());
  return SymDensity(rho.d(), rho.M(), W * rho.matrix() * W.adjoint());
}

}  // namespace symclone
