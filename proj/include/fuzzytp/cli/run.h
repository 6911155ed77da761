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

// Command-line driver. Each mode writes its files into the output
// directory:
//
//   crisp       crisp_solution.json
//   fuzzy       fuzzy_levels.csv, fuzzy_quadruples.json
//   montecarlo  mc_hist_D.csv, mc_hist_x_ij.csv, mc_summary.json
//   compare     everything from fuzzy and montecarlo, plus comparison.json
//   ingest      ingest_quadruple.json
//
// Numbers are written with 9 significant digits and JSON keys are sorted,
// so repeated runs produce identical bytes.

#ifndef FUZZYTP_CLI_RUN_H_
#define FUZZYTP_CLI_RUN_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <variant>

#include "fuzzytp/execution.h"
#include "fuzzytp/ingest.h"

namespace fuzzytp::cli {

enum class Mode { kCrisp, kFuzzy, kMonteCarlo, kCompare, kIngest };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad flags, unreadable or malformed input
  kExitInfeasible = 2,  // the problem has no feasible solution
  kExitSolver = 3,      // any other solver failure
};

struct RunConfig {
  Mode mode = Mode::kCrisp;
  std::filesystem::path input;
  int alpha_levels = 11;
  std::uint64_t mc_steps = 10000;
  std::uint64_t seed = 42;
  ConfidenceLevels levels;
  std::filesystem::path output_dir = ".";
  // Also write the parsed problem back out as JSON.
  std::optional<std::filesystem::path> export_problem;
  Execution execution = Execution::kParallel;

  // Throws std::invalid_argument on out-of-range settings.
  void Validate() const;
};

// Either a config to run or an exit code (help, usage error) for main.
std::variant<RunConfig, int> ParseArgs(int argc, const char* const* argv,
                                       std::ostream& out, std::ostream& err);

// Runs one mode. Diagnostics go to `err`, a short report to `out`.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

int Main(int argc, const char* const* argv);

}  // namespace fuzzytp::cli

#endif  // FUZZYTP_CLI_RUN_H_
