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
#include "symclone/pipeline.hpp"
#include "symclone/randomgen.hpp"

using namespace symclone;

TEST_SUITE("pipeline") {

TEST_CASE("partial_keep identity and single-system limits") {
  std::mt19937_64 rng = make_rng();
  SymDensity rho = random_density(2, 3, rng);
  CHECK((partial_keep(rho, 3).matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((partial_keep(rho, 1).matrix() - reduce_single(rho).mat).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK_THROWS_AS(partial_keep(rho, 0), DimensionError);
  CHECK_THROWS_AS(partial_keep(rho, 4), DimensionError);
}

TEST_CASE("partial_keep reconstructs the paper's two-qubit remainder") {
  std::mt19937_64 rng = make_rng();
  for (int trial = 0; trial < 10; ++trial) {
    PureState psi = random_pure(2, rng);
    const std::complex<double> a = psi.amp[0];
    const std::complex<double> b = psi.amp[1];
    SymDensity kept = partial_keep(clone_state(pure_power_density(psi, 1), 3), 2);
    const Eigen::MatrixXcd& lam = kept.matrix();
    CHECK(std::abs(lam(0, 0) - (1.0 / 18.0 + 5.0 / 9.0 * std::norm(a))) < 1e-12);
    CHECK(std::abs(lam(0, 1) - 5.0 * std::sqrt(2.0) / 18.0 * a * std::conj(b)) < 1e-12);
    CHECK(std::abs(lam(1, 1) - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(lam(2, 2) - (1.0 / 18.0 + 5.0 / 9.0 * std::norm(b))) < 1e-12);
    CHECK(std::abs(lam(0, 2)) < 1e-12);
  }
}

TEST_CASE("partial_keep agrees with the literal partial trace") {
  std::mt19937_64 rng = make_rng();
  for (int d : {2, 3}) {
    for (int N : {2, 3}) {
      SymDensity rho = random_density(d, N, rng);
      for (int keep = 1; keep < N; ++keep) {
        // Trace the trailing systems of the embedded operator, then project
        // back onto the symmetric basis of the kept block.
        Eigen::MatrixXcd full = embed_operator(rho);
        Eigen::Index kept_dim = 1;
        for (int t = 0; t < keep; ++t) kept_dim *= d;
        Eigen::Index rest = full.rows() / kept_dim;
        Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
        for (Eigen::Index i = 0; i < kept_dim; ++i) {
          for (Eigen::Index j = 0; j < kept_dim; ++j) {
            for (Eigen::Index r = 0; r < rest; ++r) block(i, j) += full(i * rest + r, j * rest + r);
          }
        }
        SymBasis basis(d, keep);
        Eigen::MatrixXcd projected(basis.size(), basis.size());
        std::vector<Eigen::VectorXcd> vecs;
        for (std::int64_t r = 0; r < basis.size(); ++r) vecs.push_back(embed_symmetric(basis.at(r)));
        for (std::int64_t r = 0; r < basis.size(); ++r) {
          for (std::int64_t c = 0; c < basis.size(); ++c) {
            projected(r, c) = vecs[static_cast<std::size_t>(r)].dot(
                block * vecs[static_cast<std::size_t>(c)]);
          }
        }
        CAPTURE(d);
        CAPTURE(N);
        CAPTURE(keep);
        CHECK((partial_keep(rho, keep).matrix() - projected).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("partial_keep marginal consistency, trace, and positivity") {
  std::mt19937_64 rng = make_rng();
  SymDensity rho = random_density(2, 4, rng);
  for (int a = 1; a <= 4; ++a) {
    SymDensity ka = partial_keep(rho, a);
    CHECK(std::abs(ka.matrix().trace() - std::complex<double>(1.0)) < 1e-12);
    CHECK(validate_density(ka).pass);
    for (int b = 1; b <= a; ++b) {
      CHECK((partial_keep(ka, b).matrix() - partial_keep(rho, b).matrix())
                .cwiseAbs()
                .maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("stage plan parsing") {
  auto plan = parse_stage_plan("3:keep2,3");
  REQUIRE(plan.size() == 2);
  CHECK(plan[0].target == 3);
  CHECK(plan[0].keep == 2);
  CHECK(plan[1].target == 3);
  CHECK(plan[1].keep == 3);

  auto single = parse_stage_plan("5");
  CHECK(single[0].target == 5);
  CHECK(single[0].keep == 5);

  CHECK_THROWS_AS(parse_stage_plan(""), ParseError);
  CHECK_THROWS_AS(parse_stage_plan("3:2"), ParseError);
  CHECK_THROWS_AS(parse_stage_plan("3:keepx"), ParseError);
  CHECK_THROWS_AS(parse_stage_plan("a,3"), ParseError);
}

TEST_CASE("the paper cascade: 1->3 keep two, then 2->3") {
  std::mt19937_64 rng = make_rng();
  for (int trial = 0; trial < 20; ++trial) {
    PureState psi = random_pure(2, rng);
    CascadeReport report = cascade(psi, 1, {{3, 2}, {3, 3}});
    REQUIRE(report.stages.size() == 2);
    CHECK(report.stages[0].per_copy_fidelity == doctest::Approx(7.0 / 9.0).epsilon(1e-12));
    CHECK(report.stages[1].per_copy_fidelity ==
          doctest::Approx(79.0 / 108.0).epsilon(1e-12));
    CHECK(report.stages[0].predicted_fidelity == Rational(7, 9));
    CHECK(report.stages[1].predicted_fidelity == Rational(79, 108));
    REQUIRE(report.stages[1].shrink.has_value());
    CHECK(*report.stages[1].shrink == doctest::Approx(25.0 / 54.0).epsilon(1e-10));
    CHECK(report.stages[1].shrink_residual < 1e-10);
  }
}

TEST_CASE("the failing cascade: 1->2 keep one, then 1->3") {
  std::mt19937_64 rng = make_rng();
  for (int trial = 0; trial < 10; ++trial) {
    PureState psi = random_pure(2, rng);
    CascadeReport report = cascade(psi, 1, {{2, 1}, {3, 3}});
    CHECK(report.stages[0].per_copy_fidelity == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(report.stages[1].per_copy_fidelity == doctest::Approx(37.0 / 54.0).epsilon(1e-12));
    CHECK(report.stages[1].predicted_fidelity == Rational(37, 54));
  }
}

TEST_CASE("single-stage cascade collapses to one machine application") {
  std::mt19937_64 rng = make_rng();
  for (int N = 2; N <= 5; ++N) {
    PureState psi = random_pure(2, rng);
    CascadeReport report = cascade(psi, 1, {{N, N}});
    CHECK(std::abs(report.stages[0].per_copy_fidelity -
                   fidelity_single(1, N, 2).to_double()) < 1e-12);
  }
}

TEST_CASE("cascade fidelity equals the product-of-shrinks prediction") {
  std::mt19937_64 rng = make_rng();
  for (int d : {2, 3}) {
    PureState psi = random_pure(d, rng);
    CascadeReport report = cascade(psi, 1, {{2, 2}, {4, 2}, {3, 3}});
    for (const CascadeStage& stage : report.stages) {
      REQUIRE(stage.predicted_fidelity.has_value());
      CHECK(std::abs(stage.per_copy_fidelity - stage.predicted_fidelity->to_double()) <
            1e-12);
    }
  }
}

TEST_CASE("cascade on a mixed state with an explicit reference") {
  std::mt19937_64 rng = make_rng();
  PureState psi = random_pure(2, rng);
  SymDensity kept = partial_keep(clone_state(pure_power_density(psi, 1), 3), 2);
  CascadeReport report = cascade(kept, psi, {{3, 3}});
  CHECK(report.stages[0].per_copy_fidelity == doctest::Approx(79.0 / 108.0).epsilon(1e-12));
  CHECK_FALSE(report.pure_input);
  CHECK_FALSE(report.stages[0].predicted_fidelity.has_value());
}

TEST_CASE("infeasible cascades are rejected") {
  std::mt19937_64 rng = make_rng();
  PureState psi = random_pure(2, rng);
  CHECK_THROWS_AS(cascade(psi, 1, {{3, 2}, {1, 1}}), DimensionError);  // 2 kept > 1 target
  CHECK_THROWS_AS(cascade(psi, 1, {{3, 4}}), DimensionError);          // keep > target
  CHECK_THROWS_AS(cascade(psi, 1, {{3, 0}}), DimensionError);
  CHECK_THROWS_AS(cascade(psi, 1, std::vector<StagePlan>{}), DimensionError);
}

TEST_CASE("strategy comparison reproduces the worked task") {
  std::vector<ScenarioReport> reports = run_strategy_comparison();
  REQUIRE(reports.size() == 4);

  CHECK(reports[0].fidelities[0].exact == Rational(3, 4));
  CHECK_FALSE(*reports[0].fidelities[0].meets_threshold);
  CHECK(*reports[0].fidelities[1].meets_threshold);
  CHECK_FALSE(reports[0].passes_all);

  CHECK(reports[1].fidelities[0].exact == Rational(5, 6));
  CHECK(reports[1].fidelities[1].exact == Rational(37, 54));
  CHECK_FALSE(reports[1].passes_all);

  CHECK(reports[2].fidelities[0].provenance == Provenance::kRecordedConstant);
  CHECK(reports[2].fidelities[1].provenance == Provenance::kRecordedConstant);
  CHECK_FALSE(reports[2].fidelities[1].exact.has_value());
  CHECK(reports[2].fidelities[1].value ==
        doctest::Approx((11.0 + 2.0 * std::sqrt(6.0)) / 18.0).epsilon(1e-15));
  CHECK(reports[2].fidelities[1].threshold == Rational(11, 12));
  CHECK_FALSE(reports[2].passes_all);

  CHECK(reports[3].fidelities[0].exact == Rational(7, 9));
  CHECK(reports[3].fidelities[1].exact == Rational(79, 108));
  CHECK(reports[3].passes_all);

  // Every computed fidelity sits in [0, 1].
  for (const ScenarioReport& r : reports) {
    for (const FidelityEntry& e : r.fidelities) {
      CHECK(e.value >= 0.0);
      CHECK(e.value <= 1.0);
    }
  }
}

TEST_CASE("fidelity_from_shrink matches the closed form") {
  for (int d = 2; d <= 5; ++d) {
    for (int M = 1; M <= 3; ++M) {
      for (int N = M; N <= 5; ++N) {
        CHECK(fidelity_from_shrink(bem_shrink(M, N, d), d) == fidelity_single(M, N, d));
      }
    }
  }
}

}  // TEST_SUITE
