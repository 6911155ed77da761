// Copyright 2026 The fuzzytp Authors
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

#include "fuzzytp/cli/run.h"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.h"

namespace fuzzytp::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

const fs::path kSourceDir(FUZZYTP_SOURCE_DIR);
const fs::path kBenchmarkFile = kSourceDir / "data" / "table1.json";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "fuzzytp");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  auto parsed = ParseArgs(static_cast<int>(argv.size()), argv.data(), out, err);
  int code;
  if (const int* c = std::get_if<int>(&parsed)) {
    code = *c;
  } else {
    code = Run(std::get<RunConfig>(parsed), out, err);
  }
  return {code, out.str(), err.str()};
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

json ReadJson(const fs::path& path) { return json::parse(ReadAll(path)); }

std::vector<std::string> SortedFiles(const fs::path& dir) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir)) {
    names.push_back(e.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

TEST(ParseArgsTest, Defaults) {
  const char* argv[] = {"fuzzytp", "p.json"};
  std::ostringstream out, err;
  auto parsed = ParseArgs(2, argv, out, err);
  ASSERT_TRUE(std::holds_alternative<RunConfig>(parsed));
  const RunConfig& c = std::get<RunConfig>(parsed);
  EXPECT_EQ(c.mode, Mode::kCrisp);
  EXPECT_EQ(c.alpha_levels, 11);
  EXPECT_EQ(c.mc_steps, 10000u);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.levels.core, 0.30);
  EXPECT_EQ(c.levels.support, 0.90);
  EXPECT_EQ(c.execution, Execution::kParallel);
}

TEST(ParseArgsTest, UsageErrors) {
  EXPECT_EQ(RunArgs({"--help"}).code, kExitOk);
  EXPECT_EQ(RunArgs({}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"--mode", "bogus", "p.json"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"--gamma-core", "0.95", "p.json"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"--alpha-levels", "1", "p.json"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"--mc-steps", "0", "p.json"}).code, kExitUsage);
}

TEST(RunTest, CrispBenchmark) {
  const fs::path dir = testing::ScratchDir("run_crisp");
  const Outcome o = RunArgs({"--mode", "crisp", kBenchmarkFile.string(), "--out", dir.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json j = ReadJson(dir / "crisp_solution.json");
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_NEAR(j["benefit"].get<double>(), testing::kBenchmarkOptimum, 1e-6);
  EXPECT_NEAR(j["shipments"]["x_12"].get<double>(), 50.0, 1e-6);
  EXPECT_TRUE(j["precheck"]["passed"].get<bool>());
}

TEST(RunTest, ExitCodesSeparateFailureKinds) {
  const fs::path dir = testing::ScratchDir("run_exit_codes");
  EXPECT_EQ(RunArgs({(dir / "missing.json").string(), "--out", dir.string()}).code,
            kExitUsage);
  std::ofstream(dir / "broken.json") << "{ not json";
  EXPECT_EQ(RunArgs({(dir / "broken.json").string(), "--out", dir.string()}).code,
            kExitUsage);
  std::ofstream(dir / "infeasible.json") << R"({"schema_version": 1,
      "kind": "distribution", "supply_max": [5], "demand_max": [10],
      "purchase_min": [8], "sale_min": [0], "purchase_price_reduced": [0],
      "sale_price_reduced": [1], "transport_cost": [[0]]})";
  const Outcome o =
      RunArgs({(dir / "infeasible.json").string(), "--out", dir.string()});
  EXPECT_EQ(o.code, kExitInfeasible);
  EXPECT_EQ(ReadJson(dir / "crisp_solution.json")["status"], "infeasible");
  std::ofstream(dir / "trap.json") << R"({"schema_version": 1,
      "kind": "distribution", "supply_max": [[1, 2, 3, 4]], "demand_max": [10],
      "purchase_min": [0], "sale_min": [0], "purchase_price_reduced": [0],
      "sale_price_reduced": [1], "transport_cost": [[0]]})";
  EXPECT_EQ(RunArgs({"--mode", "montecarlo", (dir / "trap.json").string(), "--out",
                     dir.string()})
                .code,
            kExitUsage);
}

TEST(RunTest, TransportationCrisp) {
  const fs::path dir = testing::ScratchDir("run_transport");
  std::ofstream(dir / "t.json") << R"({"schema_version": 1,
      "kind": "transportation", "objective": "min", "supplies": [1, 1],
      "demands": [1, 1], "costs": [[1, 5], [5, 1]]})";
  const Outcome o = RunArgs({(dir / "t.json").string(), "--out", dir.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json j = ReadJson(dir / "crisp_solution.json");
  EXPECT_EQ(j["objective_value"], 2.0);
  EXPECT_EQ(j["shipments"]["x_11"], 1.0);
  EXPECT_EQ(j["basis"].size(), 3u);

  std::ofstream(dir / "u.json") << R"({"schema_version": 1,
      "kind": "transportation", "supplies": [1, 1], "demands": [3],
      "costs": [[1], [2]]})";
  EXPECT_EQ(RunArgs({(dir / "u.json").string(), "--out", dir.string()}).code,
            kExitInfeasible);
  EXPECT_EQ(RunArgs({"--mode", "fuzzy", (dir / "t.json").string(), "--out",
                     dir.string()})
                .code,
            kExitUsage);
}

TEST(RunTest, FuzzyTable) {
  const fs::path dir = testing::ScratchDir("run_fuzzy");
  const Outcome o = RunArgs({"--mode", "fuzzy", kBenchmarkFile.string(), "--out",
                             dir.string(), "--alpha-levels", "5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::ifstream csv(dir / "fuzzy_levels.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header,
            "alpha,D_lo,D_hi,x_11_lo,x_11_hi,x_12_lo,x_12_hi,x_13_lo,x_13_hi,"
            "x_21_lo,x_21_hi,x_22_lo,x_22_hi,x_23_lo,x_23_hi,x_31_lo,x_31_hi,"
            "x_32_lo,x_32_hi,x_33_lo,x_33_hi,feasible,repaired");
  std::string line;
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 5);
  const json q = ReadJson(dir / "fuzzy_quadruples.json");
  EXPECT_EQ(q["quadruples"]["D"].size(), 4u);
  EXPECT_EQ(q["alpha_levels"], 5);
}

TEST(RunTest, IngestSamples) {
  const fs::path dir = testing::ScratchDir("run_ingest");
  std::mt19937_64 rng(100);
  std::normal_distribution<double> n(100.0, 10.0);
  {
    std::ofstream s(dir / "samples.txt");
    s.precision(17);
    for (int k = 0; k < 100000; ++k) s << n(rng) << '\n';
  }
  const Outcome o = RunArgs({"--mode", "ingest", (dir / "samples.txt").string(),
                             "--out", dir.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json j = ReadJson(dir / "ingest_quadruple.json");
  const std::vector<double> expected{83.55, 96.15, 103.85, 116.45};
  for (int c = 0; c < 4; ++c) {
    EXPECT_NEAR(j["quadruple"][c].get<double>(), expected[c], 0.5);
  }
  EXPECT_EQ(j["format"], "samples");

  std::ofstream(dir / "h.csv") << "0,10,5\n";
  ASSERT_EQ(RunArgs({"--mode", "ingest", (dir / "h.csv").string(), "--out",
                     dir.string()})
                .code,
            kExitOk);
  EXPECT_EQ(ReadJson(dir / "ingest_quadruple.json")["quadruple"],
            json::parse("[0.5, 3.5, 6.5, 9.5]"));
}

TEST(RunTest, CompareIsReproducibleAndMatchesFixture) {
  const fs::path first = testing::ScratchDir("run_compare_1");
  const fs::path second = testing::ScratchDir("run_compare_2");
  for (const fs::path& dir : {first, second}) {
    const Outcome o = RunArgs({"--mode", "compare", kBenchmarkFile.string(),
                               "--mc-steps", "10000", "--seed", "42", "--out",
                               dir.string()});
    ASSERT_EQ(o.code, kExitOk) << o.err;
  }
  const fs::path fixture = kSourceDir / "tests" / "fixtures" / "table1_compare";
  const std::vector<std::string> files = SortedFiles(first);
  EXPECT_EQ(files, SortedFiles(second));
  EXPECT_EQ(files, SortedFiles(fixture));
  for (const std::string& f : files) {
    EXPECT_EQ(ReadAll(first / f), ReadAll(second / f)) << f;
    EXPECT_EQ(ReadAll(first / f), ReadAll(fixture / f)) << f;
  }
}

TEST(RunTest, SerialFlagGivesSameBytes) {
  const fs::path a = testing::ScratchDir("run_serial_a");
  const fs::path b = testing::ScratchDir("run_serial_b");
  ASSERT_EQ(RunArgs({"--mode", "compare", kBenchmarkFile.string(), "--mc-steps",
                     "500", "--out", a.string()})
                .code,
            kExitOk);
  ASSERT_EQ(RunArgs({"--mode", "compare", kBenchmarkFile.string(), "--mc-steps",
                     "500", "--serial", "--out", b.string()})
                .code,
            kExitOk);
  for (const std::string& f : SortedFiles(a)) {
    EXPECT_EQ(ReadAll(a / f), ReadAll(b / f)) << f;
  }
}

TEST(RunTest, ExportedProblemRunsIdentically) {
  const fs::path dir = testing::ScratchDir("run_export");
  ASSERT_EQ(RunArgs({"--mode", "fuzzy", kBenchmarkFile.string(), "--out",
                     (dir / "a").string(), "--export-problem",
                     (dir / "copy.json").string()})
                .code,
            kExitOk);
  ASSERT_EQ(RunArgs({"--mode", "fuzzy", (dir / "copy.json").string(), "--out",
                     (dir / "b").string()})
                .code,
            kExitOk);
  EXPECT_EQ(ReadAll(dir / "a" / "fuzzy_levels.csv"),
            ReadAll(dir / "b" / "fuzzy_levels.csv"));
}

}  // namespace
}  // namespace fuzzytp::cli
