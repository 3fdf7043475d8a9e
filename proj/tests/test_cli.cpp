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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symclone/cli.hpp"
#include "symclone/jsonio.hpp"
#include "symclone/randomgen.hpp"

using namespace symclone;

namespace {

struct CliRun {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun result;
  result.exit_code = run_cli(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream file(path);
  file << content;
  return path;
}

// diag(11/18, 1/3, 1/18) on (2,0), (1,1), (0,2): the two-qubit remainder of
// a 1->3 cloning of |1>.
const char* kRemainderUp = R"({
  "d": 2, "M": 2,
  "entries": [
    {"m": [2, 0], "mp": [2, 0], "re": 0.61111111111111105, "im": 0.0},
    {"m": [1, 1], "mp": [1, 1], "re": 0.33333333333333331, "im": 0.0},
    {"m": [0, 2], "mp": [0, 2], "re": 0.055555555555555552, "im": 0.0}
  ]
})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("clone a basis qubit 1->3") {
  CliRun result = run({"clone", "--d", "2", "--M", "1", "--N", "3", "--pure", "1,0"});
  REQUIRE(result.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc["summary"]["bem_shrink"]["exact"] == "5/9");
  CHECK(std::abs(doc["summary"]["extracted_shrink"]["factor"].get<double>() - 5.0 / 9.0) <
        1e-12);
  CHECK(doc["summary"]["output_diagnostics"]["pass"].get<bool>());

  SymDensity out_state = state_from_json(doc["output_state"]);
  QuditDensity red = reduce_single(out_state);
  CHECK(std::abs(red.mat(0, 0).real() - 7.0 / 9.0) < 1e-12);
  CHECK(std::abs(red.mat(1, 1).real() - 2.0 / 9.0) < 1e-12);
}

TEST_CASE("clone with N = M returns the input state") {
  std::mt19937_64 rng = make_rng();
  SymDensity rho = random_density(2, 2, rng);
  auto path = write_temp("symclone_test_identity.json", dump_json17(state_to_json(rho)));

  CliRun result = run({"clone", "--d", "2", "--M", "2", "--N", "2", "--state", path.string()});
  REQUIRE(result.exit_code == 0);
  SymDensity out_state =
      state_from_json(nlohmann::json::parse(result.out)["output_state"]);
  CHECK((out_state.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("clone the stored remainder against a reference") {
  auto path = write_temp("symclone_test_eq1.json", kRemainderUp);
  CliRun result = run({"clone", "--d", "2", "--N", "3", "--state", path.string(),
                       "--reference", "1,0"});
  REQUIRE(result.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(std::abs(doc["summary"]["fidelity_vs_reference"].get<double>() - 79.0 / 108.0) <
        1e-12);
}

TEST_CASE("reduce --keep 2 reproduces the remainder matrix") {
  CliRun cloned = run({"clone", "--d", "2", "--M", "1", "--N", "3", "--pure", "1,0"});
  REQUIRE(cloned.exit_code == 0);
  nlohmann::ordered_json cloned_doc = nlohmann::ordered_json::parse(cloned.out);
  auto path = write_temp("symclone_test_3copy.json", dump_json17(cloned_doc["output_state"]));

  CliRun result = run({"reduce", "--state", path.string(), "--keep", "2"});
  REQUIRE(result.exit_code == 0);
  SymDensity kept = state_from_json(nlohmann::json::parse(result.out)["reduced_state"]);
  CHECK(std::abs(kept.matrix()(0, 0).real() - 11.0 / 18.0) < 1e-12);
  CHECK(std::abs(kept.matrix()(1, 1).real() - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(kept.matrix()(2, 2).real() - 1.0 / 18.0) < 1e-12);
}

TEST_CASE("exit codes follow the contract") {
  // Usage errors: 2.
  CHECK(run({"clone"}).exit_code == 2);                        // missing --N
  CHECK(run({"nonsense"}).exit_code == 2);                     // unknown subcommand
  CHECK(run({"clone", "--N", "3", "--bogus", "1"}).exit_code == 2);
  CHECK(run({"mub", "--d", "4"}).exit_code == 2);
  CHECK(run({"mub", "--d", "4"}).err.find("prime") != std::string::npos);
  CHECK(run({"clone", "--N", "3"}).exit_code == 2);            // neither --state nor --pure
  CHECK(run({"pipeline", "--stages", "3:bad", "--pure", "1,0"}).exit_code == 2);
  CHECK(run({"clone", "--N", "2", "--pure", "1;0"}).exit_code == 2);

  auto bad = write_temp("symclone_test_bad.json", "{ not json");
  CHECK(run({"clone", "--N", "3", "--state", bad.string()}).exit_code == 2);

  // Dimension and scale errors: 3.
  auto good = write_temp("symclone_test_eq1b.json", kRemainderUp);
  CHECK(run({"clone", "--N", "1", "--state", good.string()}).exit_code == 3);  // N < M
  CHECK(run({"clone", "--d", "3", "--N", "3", "--state", good.string()}).exit_code == 3);
  CHECK(run({"clone", "--d", "2", "--M", "1", "--N", "25", "--pure", "1,0"}).exit_code == 3);
  CHECK(run({"clone", "--d", "3", "--N", "2", "--pure", "1,0"}).exit_code == 3);
  CHECK(run({"reduce", "--keep", "5", "--state", good.string()}).exit_code == 3);

  // Help is a success.
  CHECK(run({"--help"}).exit_code == 0);
  CHECK(run({"clone", "--help"}).exit_code == 0);
}

TEST_CASE("verify verdicts are seed-independent and byte-deterministic") {
  CliRun base = run({"verify"});
  REQUIRE(base.exit_code == 0);
  CliRun again = run({"verify"});
  CHECK(base.out == again.out);

  CliRun seeded = run({"verify", "--seed", "7"});
  REQUIRE(seeded.exit_code == 0);

  nlohmann::json a = nlohmann::json::parse(base.out);
  nlohmann::json b = nlohmann::json::parse(seeded.out);
  REQUIRE(a["checks"].size() == b["checks"].size());
  for (std::size_t i = 0; i < a["checks"].size(); ++i) {
    CHECK(a["checks"][i]["name"] == b["checks"][i]["name"]);
    CHECK(a["checks"][i]["pass"] == b["checks"][i]["pass"]);
  }
  CHECK(a["all_pass"].get<bool>());
  CHECK(b["all_pass"].get<bool>());

  // Check names arrive sorted.
  for (std::size_t i = 1; i < a["checks"].size(); ++i) {
    CHECK(a["checks"][i - 1]["name"].get<std::string>() <
          a["checks"][i]["name"].get<std::string>());
  }
}

TEST_CASE("verify with an injected fault fails with exit 1") {
  CliRun result = run({"verify", "--inject-fault"});
  CHECK(result.exit_code == 1);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK_FALSE(doc["all_pass"].get<bool>());
}

TEST_CASE("floats are serialized with 17 significant digits") {
  auto path = write_temp("symclone_test_eq1c.json", kRemainderUp);
  CliRun result = run({"clone", "--d", "2", "--N", "2", "--state", path.string()});
  REQUIRE(result.exit_code == 0);
  // 11/18 must survive the round trip textually.
  CHECK(result.out.find("0.61111111111111105") != std::string::npos);
  CHECK(result.out.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("csv output flattens the state") {
  CliRun result = run({"clone", "--d", "2", "--M", "1", "--N", "2", "--pure", "1,0",
                       "--format", "csv"});
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.rfind("m,mp,re,im\n", 0) == 0);
  CHECK(result.out.find("\"2 0\",\"2 0\"") != std::string::npos);
}

TEST_CASE("mub report carries bases and attack numbers") {
  CliRun result = run({"mub", "--d", "3"});
  REQUIRE(result.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc["num_bases"] == 4);
  CHECK(doc["bases"].size() == 4);
  CHECK(std::abs(doc["overlap"]["max_cross_overlap_squared"].get<double>() - 1.0 / 3.0) <
        1e-10);
  CHECK(doc["attack"]["analytic_fidelity"]["exact"] == "3/4");
  CHECK(std::abs(doc["attack"]["mean_fidelity"].get<double>() - 0.75) < 1e-12);
}

TEST_CASE("pipeline strategy table and cascade plans") {
  CliRun strategies = run({"pipeline", "--task", "paper-example"});
  REQUIRE(strategies.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(strategies.out);
  REQUIRE(doc["strategies"].size() == 4);
  CHECK_FALSE(doc["strategies"][0]["passes_all"].get<bool>());
  CHECK(doc["strategies"][3]["passes_all"].get<bool>());
  CHECK(doc["strategies"][2]["fidelities"][1]["provenance"] == "recorded-constant");

  CliRun cascade_run = run({"pipeline", "--stages", "3:keep2,3", "--pure", "0.6,0.8i"});
  REQUIRE(cascade_run.exit_code == 0);
  nlohmann::json plan = nlohmann::json::parse(cascade_run.out);
  CHECK(std::abs(plan["stages"][0]["per_copy_fidelity"].get<double>() - 7.0 / 9.0) < 1e-12);
  CHECK(std::abs(plan["stages"][1]["per_copy_fidelity"].get<double>() - 79.0 / 108.0) <
        1e-12);
  CHECK(plan["stages"][1]["predicted_fidelity"]["exact"] == "79/108");

  CliRun table = run({"pipeline", "--task", "paper-example", "--format", "table"});
  CHECK(table.out.find("meets both demands") != std::string::npos);
}

TEST_CASE("deterministic output for identical configs") {
  CliRun a = run({"pipeline", "--task", "paper-example"});
  CliRun b = run({"pipeline", "--task", "paper-example"});
  CHECK(a.out == b.out);

  CliRun c1 = run({"clone", "--d", "2", "--M", "1", "--N", "4", "--pure", "0.6,0.8i"});
  CliRun c2 = run({"clone", "--d", "2", "--M", "1", "--N", "4", "--pure", "0.6,0.8i"});
  CHECK(c1.out == c2.out);
}

}  // TEST_SUITE
