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

#include <doctest.h>

#include "symclone/oracle.hpp"
#include "symclone/randomgen.hpp"

using namespace symclone;

TEST_SUITE("oracle") {

TEST_CASE("isometry columns carry the explicit 2->3 coefficients") {
  IsometryMatrix iso = build_isometry(2, 2, 3);
  REQUIRE(iso.V.rows() == 8);  // dim_sym(2,3) * dim_sym(2,1)
  REQUIRE(iso.V.cols() == 3);

  const double r3 = std::sqrt(3.0) / 2.0;
  const double r2 = 1.0 / std::sqrt(2.0);
  // Column for (2,0): sqrt(3)/2 |3,0>|k=(1,0)> + 1/2 |2,1>|k=(0,1)>.
  CHECK(std::abs(iso.V(0 * 2 + 0, 0) - r3) < 1e-15);
  CHECK(std::abs(iso.V(1 * 2 + 1, 0) - 0.5) < 1e-15);
  // Column for (1,1): 1/sqrt(2) |2,1>|(1,0)> + 1/sqrt(2) |1,2>|(0,1)>.
  CHECK(std::abs(iso.V(1 * 2 + 0, 1) - r2) < 1e-15);
  CHECK(std::abs(iso.V(2 * 2 + 1, 1) - r2) < 1e-15);
  // Column for (0,2): 1/2 |1,2>|(1,0)> + sqrt(3)/2 |0,3>|(0,1)>.
  CHECK(std::abs(iso.V(2 * 2 + 0, 2) - 0.5) < 1e-15);
  CHECK(std::abs(iso.V(3 * 2 + 1, 2) - r3) < 1e-15);
  // Everything else vanishes: two entries per column.
  CHECK(iso.V.cwiseAbs().sum() ==
        doctest::Approx(2 * (r3 + 0.5) + 2 * r2).epsilon(1e-14));
}

TEST_CASE("N = M isometry is identity-shaped") {
  IsometryMatrix iso = build_isometry(3, 2, 2);
  CHECK((iso.V - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("1->2 qubit column pattern") {
  IsometryMatrix iso = build_isometry(2, 1, 2);
  CHECK(std::abs(iso.V(0 * 2 + 0, 0) - std::sqrt(2.0 / 3.0)) < 1e-15);
  CHECK(std::abs(iso.V(1 * 2 + 1, 0) - std::sqrt(1.0 / 3.0)) < 1e-15);
}

TEST_CASE("V^dag V is the identity across the grid") {
  for (int d : {2, 3}) {
    for (int M = 1; M <= 3; ++M) {
      for (int N = M; N <= 5; ++N) {
        IsometryMatrix iso = build_isometry(d, M, N);
        Eigen::MatrixXd gram = iso.V.transpose() * iso.V;
        CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("oracle_clone equals the closed form over the randomized grid") {
  std::mt19937_64 rng = make_rng();
  for (int d : {2, 3}) {
    for (int M = 1; M <= 3; ++M) {
      for (int N = M; N <= 5; ++N) {
        SymDensity rho = random_density(d, M, rng);
        CHECK((oracle_clone(rho, N).matrix() - clone_state(rho, N).matrix())
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("oracle_clone at N = M returns the input") {
  std::mt19937_64 rng = make_rng();
  SymDensity rho = random_density(2, 3, rng);
  CHECK((oracle_clone(rho, 3).matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("oracle reduction checks") {
  std::mt19937_64 rng = make_rng();

  Eigen::MatrixXcd pure_top = Eigen::MatrixXcd::Zero(4, 4);
  pure_top(0, 0) = 1.0;
  QuditDensity red = oracle_reduce(SymDensity(2, 3, pure_top));
  CHECK(std::abs(red.mat(0, 0) - 1.0) < 1e-14);

  for (int trial = 0; trial < 3; ++trial) {
    SymDensity rho = random_density(3, 3, rng);
    CHECK((oracle_reduce(rho).mat - reduce_single(rho).mat).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("oracle 79/108: clone the remainder of a 1->3 pure cloning") {
  std::mt19937_64 rng = make_rng();
  PureState psi = random_pure(2, rng);
  // Build the remainder through the oracle itself: clone 1->3, embed, trace
  // one system, then clone 2->3 and reduce.
  SymDensity three = oracle_clone(pure_power_density(psi, 1), 3);
  Eigen::MatrixXcd full = embed_operator(three);
  SymBasis pair_basis(2, 2);
  std::vector<Eigen::VectorXcd> pair_vecs;
  for (std::int64_t r = 0; r < pair_basis.size(); ++r) {
    pair_vecs.push_back(embed_symmetric(pair_basis.at(r)));
  }
  // Trace out the last qubit of the 3-system operator.
  Eigen::MatrixXcd kept = Eigen::MatrixXcd::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      kept(i, j) = full(i * 2 + 0, j * 2 + 0) + full(i * 2 + 1, j * 2 + 1);
    }
  }
  Eigen::MatrixXcd lam(3, 3);
  for (std::int64_t r = 0; r < 3; ++r) {
    for (std::int64_t c = 0; c < 3; ++c) {
      lam(r, c) = pair_vecs[static_cast<std::size_t>(r)].dot(
          kept * pair_vecs[static_cast<std::size_t>(c)]);
    }
  }
  SymDensity remainder(2, 2, lam);
  double f = fidelity_pure(oracle_reduce(oracle_clone(remainder, 3)), psi);
  CHECK(f == doctest::Approx(79.0 / 108.0).epsilon(1e-12));
}

TEST_CASE("oracle_global_fidelity matches the closed formula and ignores the input") {
  std::mt19937_64 rng = make_rng();
  PureState x = random_pure(2, rng);
  CHECK(oracle_global_fidelity(x, 2, 2) == doctest::Approx(1.0).epsilon(1e-12));

  const std::array<std::array<int, 3>, 3> configs = {{{1, 2, 2}, {2, 3, 2}, {1, 2, 3}}};
  for (const auto& [M, N, d] : configs) {
    double target = fidelity_global(M, N, d).to_double();
    double lo = 1.0, hi = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      double f = oracle_global_fidelity(random_pure(d, rng), M, N);
      lo = std::min(lo, f);
      hi = std::max(hi, f);
      CHECK(std::abs(f - target) < 1e-10);
    }
    CHECK(hi - lo < 1e-10);
  }
}

TEST_CASE("cloning commutes with product rotations") {
  std::mt19937_64 rng = make_rng();
  for (int d : {2, 3}) {
    for (int M = 1; M <= 2; ++M) {
      for (int N = M; N <= 3; ++N) {
        SymDensity rho = random_density(d, M, rng);
        Eigen::MatrixXcd v = random_unitary(d, rng);
        Eigen::MatrixXcd lhs = reduced_output(rotate_state(rho, v), N).mat;
        Eigen::MatrixXcd rhs = v * reduced_output(rho, N).mat * v.adjoint();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
      }
    }
  }
}

TEST_CASE("rotate_state preserves density invariants") {
  std::mt19937_64 rng = make_rng();
  SymDensity rho = random_density(2, 2, rng);
  SymDensity rotated = rotate_state(rho, random_unitary(2, rng));
  DensityDiagnostics diag = validate_density(rotated, {1e-10, 1e-10, -1e-10});
  CHECK(diag.pass);
}

}  // TEST_SUITE
