// Copyright 2026 The dimwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs the dimwit executable and checks its output and exit codes.

#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dimwit/dimwit.h"

namespace {

struct CliRun {
  int exit_code;
  std::string output;
};

CliRun run_cli(const std::string &args) {
  const std::string command = std::string(DIMWIT_CLI_PATH) + " " + args + " 2>&1";
  std::FILE *pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

bool contains(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("dimwit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string &name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, bounds_examples) {
  CliRun r = run_cli("bounds --witness quadratic --N 7 --d 5");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "Q=19.600000, C=19\n");
  EXPECT_EQ(run_cli("bounds --witness quadratic --N 7 --d 7").output, "Q=21, C=21\n");
  EXPECT_EQ(run_cli("bounds --witness linear --N 3 --d 2").output, "Q=2.598076, C=2\n");
  EXPECT_EQ(run_cli("bounds --witness linear --N 5 --d 2").output,
            "Q=7.905694, C=requires enumeration\n");

  r = run_cli("--json bounds --witness quadratic --N 7 --d 6");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.output);
  EXPECT_DOUBLE_EQ(doc["quantum_bound"].get<double>(), 24.5 * (1.0 - 1.0 / 6.0));
  EXPECT_EQ(doc["classical_bound"].get<double>(), 20.0);
}

TEST_F(CliTest, usage_errors_exit_2) {
  EXPECT_EQ(run_cli("bounds --witness cubic --N 3 --d 2").exit_code, 2);
  EXPECT_EQ(run_cli("bounds --N 3 --d 2").exit_code, 2);
  EXPECT_EQ(run_cli("bounds --witness quadratic --N 1 --d 1").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("bounds --help").exit_code, 0);
  EXPECT_EQ(run_cli("--out x.json bounds --witness linear --N 3 --d 2").exit_code, 2);
}

TEST_F(CliTest, states_round_trip) {
  const std::string file = path("e.json");
  CliRun r = run_cli("states --N 3 --d 2 --out " + file);
  ASSERT_EQ(r.exit_code, 0) << r.output;

  dw_ensemble *loaded = nullptr;
  ASSERT_EQ(dw_ensemble_load(file.c_str(), &loaded, nullptr), DW_OK);
  for (size_t x = 1; x <= 3; ++x) {
    for (size_t xp = 1; xp < x; ++xp) {
      double f = 0;
      dw_ensemble_fidelity(loaded, x, xp, &f);
      EXPECT_NEAR(f, 0.5, 1e-12);
    }
  }
  // Saving the loaded ensemble reproduces the file byte for byte.
  const std::string again = path("again.json");
  ASSERT_EQ(dw_ensemble_save(loaded, nullptr, again.c_str()), DW_OK);
  EXPECT_EQ(read_file(file), read_file(again));
  dw_ensemble_free(loaded);

  // The file matches the in-memory construction exactly.
  dw_ensemble *direct = nullptr;
  ASSERT_EQ(dw_ensemble_fourier(3, 2, &direct), DW_OK);
  char *text = nullptr;
  ASSERT_EQ(dw_ensemble_to_json(direct, nullptr, &text), DW_OK);
  EXPECT_EQ(read_file(file), std::string(text));
  dw_string_free(text);
  dw_ensemble_free(direct);

  // Without --out the document goes to standard output.
  r = run_cli("states --N 3 --d 2");
  EXPECT_EQ(r.output, read_file(file) + "\n");
}

TEST_F(CliTest, states_orthogonal_cases) {
  const std::string pair = path("pair.json");
  ASSERT_EQ(run_cli("states --N 2 --d 2 --out " + pair).exit_code, 0);
  dw_ensemble *e = nullptr;
  ASSERT_EQ(dw_ensemble_load(pair.c_str(), &e, nullptr), DW_OK);
  double f = 1;
  dw_ensemble_fidelity(e, 2, 1, &f);
  EXPECT_NEAR(f, 0.0, 1e-12);
  dw_ensemble_free(e);

  const std::string basis = path("basis.json");
  ASSERT_EQ(run_cli("states --N 5 --d 5 --out " + basis).exit_code, 0);
  ASSERT_EQ(dw_ensemble_load(basis.c_str(), &e, nullptr), DW_OK);
  double purity = 0;
  dw_ensemble_average_purity(e, &purity);
  // tr(Omega^2) = 1/d exactly when Omega = I/d.
  EXPECT_NEAR(purity, 0.2, 1e-12);
  dw_ensemble_free(e);
}

TEST_F(CliTest, states_errors) {
  EXPECT_EQ(run_cli("states --N 3 --d 4 --out " + path("x.json")).exit_code, 2);
  EXPECT_EQ(run_cli("states --N 3 --d 2 --out " + path("missing/dir/x.json")).exit_code, 3);
}

TEST_F(CliTest, evaluate_examples) {
  const std::string e7 = path("e7.json");
  ASSERT_EQ(run_cli("states --N 7 --d 2 --out " + e7).exit_code, 0);
  CliRun r = run_cli("evaluate --witness quadratic --ensemble " + e7 + " --helstrom");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "value=12.250000\n"));
  EXPECT_TRUE(contains(r.output, "min quantum d=2\n"));
  EXPECT_TRUE(contains(r.output, "min classical d=3\n"));

  const std::string e3 = path("e3.json");
  ASSERT_EQ(run_cli("states --N 3 --d 2 --out " + e3).exit_code, 0);
  r = run_cli("evaluate --witness linear --ensemble " + e3 + " --helstrom");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "value=2.598076\n"));
  EXPECT_TRUE(contains(r.output, "min quantum d=2\n"));
  EXPECT_TRUE(contains(r.output, "min classical d=3\n"));

  // Without effects in the file the Helstrom measurements must be requested.
  EXPECT_EQ(run_cli("evaluate --witness linear --ensemble " + e3).exit_code, 2);
  EXPECT_EQ(run_cli("evaluate --witness linear --table " + e3 + " --ensemble " + e3).exit_code, 2);
  EXPECT_EQ(run_cli("evaluate --witness linear --table " + e3 + " --helstrom").exit_code, 2);
  EXPECT_EQ(run_cli("evaluate --witness linear --ensemble " + path("nope.json") + " --helstrom")
                .exit_code,
            3);
}

TEST_F(CliTest, evaluate_uniform_table) {
  const std::string file = path("uniform.json");
  nlohmann::json p = nlohmann::json::array();
  for (int x = 0; x < 3; ++x) {
    nlohmann::json rows = nlohmann::json::array();
    for (int y = 0; y < 3; ++y) rows.push_back({0.5, 0.5});
    p.push_back(rows);
  }
  std::ofstream(file) << nlohmann::json{{"witness", "quadratic"}, {"N", 3}, {"m", 3}, {"k", 2}, {"p", p}}.dump();
  CliRun r = run_cli("--json evaluate --witness quadratic --table " + file);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const auto doc = nlohmann::json::parse(r.output);
  EXPECT_EQ(doc["value"].get<double>(), 0.0);
  EXPECT_EQ(doc["min_quantum_d"].get<int>(), 1);
  EXPECT_EQ(doc["min_classical_d"].get<int>(), 1);

  // A pair table has the wrong shape for the guessing witness.
  EXPECT_EQ(run_cli("evaluate --witness guessing --table " + file).exit_code, 2);
}

TEST_F(CliTest, evaluate_names_bad_state) {
  const std::string file = path("bad.json");
  std::ofstream(file) << R"({"dim": 2, "states": [[[1, 0], [0, 0]], [[1, 0], [1, 0]]]})";
  CliRun r = run_cli("evaluate --witness linear --ensemble " + file + " --helstrom");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.output, "state 2")) << r.output;
}

TEST_F(CliTest, seesaw_examples) {
  CliRun r = run_cli("--json seesaw --witness linear --N 3 --d 2 --seed 1");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  auto doc = nlohmann::json::parse(r.output);
  EXPECT_LE(doc["gap"].get<double>(), 1e-3);
  EXPECT_EQ(doc["restart_values"].size(), 20u);

  r = run_cli("seesaw --witness quadratic --N 4 --d 4");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "best=6.000000\n")) << r.output;

  r = run_cli("--json seesaw --witness quadratic --N 7 --d 6 --seed 1");
  ASSERT_EQ(r.exit_code, 0);
  doc = nlohmann::json::parse(r.output);
  EXPECT_NEAR(doc["best_value"].get<double>(), 245.0 / 12.0, 1e-3);

  EXPECT_EQ(run_cli("seesaw --witness guessing --N 3 --d 2").exit_code, 2);
  EXPECT_EQ(run_cli("seesaw --witness linear --N 3 --d 2 --restarts 0").exit_code, 2);
}

TEST_F(CliTest, seesaw_dump_feeds_evaluate) {
  const std::string dump = path("dump.json");
  CliRun r = run_cli("seesaw --witness linear --N 4 --d 2 --restarts 5 --out " + dump);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const auto doc = nlohmann::json::parse(read_file(dump));
  EXPECT_TRUE(doc.contains("effects"));
  EXPECT_EQ(doc["N"].get<int>(), 4);

  r = run_cli("evaluate --witness linear --ensemble " + dump);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "value=4.898979\n")) << r.output;
}

TEST_F(CliTest, reproduce_bounds_table) {
  CliRun r = run_cli("reproduce --table 1");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            "Quadratic witness bounds for N=7\n"
            "d   2       3       4       5       6       7\n"
            "C   12      16      18      19      20      21\n"
            "Q   12.25   16.33   18.38   19.60   20.42   21\n");
  EXPECT_EQ(run_cli("reproduce --table 1").output, r.output);
  EXPECT_EQ(run_cli("reproduce --table 3").exit_code, 2);
  EXPECT_EQ(run_cli("reproduce --table 2 --nmax 11").exit_code, 2);
}

TEST_F(CliTest, reproduce_tightness_table) {
  CliRun r = run_cli("--json reproduce --table 2 --nmax 5");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const auto doc = nlohmann::json::parse(r.output);
  const auto &entries = doc["entries"];
  ASSERT_EQ(entries.size(), 4u);
  const int expected[4][2] = {{3, 2}, {4, 2}, {4, 3}, {5, 4}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(entries[i]["N"].get<int>(), expected[i][0]);
    EXPECT_EQ(entries[i]["d"].get<int>(), expected[i][1]);
    EXPECT_TRUE(entries[i]["attained"].get<bool>());
  }
}

TEST_F(CliTest, classical_examples) {
  CliRun r = run_cli("classical --witness quadratic --N 7 --d 3");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            "witness=quadratic N=7 d=3\nenumerated=16\nformula=16\nverdict=match\n"
            "encoding=(1,1,1,2,2,3,3)\n");
  r = run_cli("classical --witness guessing --N 5 --d 2");
  EXPECT_TRUE(contains(r.output, "enumerated=0.4\n")) << r.output;
  r = run_cli("classical --witness linear --N 4 --d 3");
  EXPECT_TRUE(contains(r.output, "enumerated=5\nformula=5\nverdict=match\n")) << r.output;
  r = run_cli("classical --witness linear --N 5 --d 2");
  EXPECT_TRUE(contains(r.output, "formula=none\n")) << r.output;
  EXPECT_EQ(run_cli("classical --witness quadratic --N 16 --d 6").exit_code, 2);
}

}  // namespace
