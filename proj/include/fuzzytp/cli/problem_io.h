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

// Problem files (JSON, schema_version 1).
//
// Distributor problems:
//
//   {
//     "schema_version": 1,
//     "kind": "distribution",
//     "supply_max":             [<param> x M],
//     "demand_max":             [<param> x N],
//     "purchase_min":           [<param> x M],
//     "sale_min":               [<param> x N],
//     "purchase_price_reduced": [<param> x M],
//     "sale_price_reduced":     [<param> x N],
//     "transport_cost":         [[<param> x N] x M],
//     "purchase_price_contract": [<param> x M],   (optional, metadata)
//     "sale_price_contract":     [<param> x N]    (optional, metadata)
//   }
//
// where <param> is one of
//
//   460                          crisp value
//   [78, 95, 105, 120]           trapezoid quadruple
//   {"mean": 460, "sigma": 10}   Gaussian
//   {"histogram": "h.csv"}       histogram CSV, path relative to the file
//   {"samples": "s.txt"}         sample file, path relative to the file
//
// Classical transportation problems:
//
//   {"schema_version": 1, "kind": "transportation", "objective": "min",
//    "supplies": [...], "demands": [...], "costs": [[...], ...]}

#ifndef FUZZYTP_CLI_PROBLEM_IO_H_
#define FUZZYTP_CLI_PROBLEM_IO_H_

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fuzzytp/distribution_model.h"
#include "fuzzytp/grid.h"
#include "fuzzytp/ingest.h"
#include "fuzzytp/monte_carlo.h"
#include "fuzzytp/transport.h"

namespace fuzzytp::cli {

inline constexpr int kSchemaVersion = 1;

// Schema or content error; what() starts with the offending field path.
class ProblemFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter as written in the file, before normalization to a trapezoid.
struct ParameterSource {
  enum class Kind { kCrisp, kTrapezoid, kGaussian, kHistogram, kSamples };

  Kind kind = Kind::kCrisp;
  std::array<double, 4> values{};  // crisp: [0]; gaussian: [0]=mean, [1]=sigma
  std::string path;                // histogram / samples, as written

  static ParameterSource Crisp(double v) { return {Kind::kCrisp, {v, 0, 0, 0}, {}}; }
  static ParameterSource Gaussian(double mean, double sigma) {
    return {Kind::kGaussian, {mean, sigma, 0, 0}, {}};
  }

  friend bool operator==(const ParameterSource&, const ParameterSource&) = default;
};

struct DistributionDocument {
  std::vector<ParameterSource> supply_max;
  std::vector<ParameterSource> demand_max;
  std::vector<ParameterSource> purchase_min;
  std::vector<ParameterSource> sale_min;
  std::vector<ParameterSource> purchase_price_reduced;
  std::vector<ParameterSource> sale_price_reduced;
  Grid<ParameterSource> transport_cost;
  std::optional<std::vector<ParameterSource>> purchase_price_contract;
  std::optional<std::vector<ParameterSource>> sale_price_contract;
  // Directory that relative sidecar paths are resolved against.
  std::filesystem::path base_dir;

  friend bool operator==(const DistributionDocument&,
                         const DistributionDocument&) = default;
};

struct TransportDocument {
  TransportInstance instance;
  TransportObjective objective = TransportObjective::kMinimize;
};

using ProblemDocument = std::variant<DistributionDocument, TransportDocument>;

ProblemDocument ParseProblem(const nlohmann::json& root,
                             const std::filesystem::path& base_dir);
// Reads and parses; I/O failures throw std::runtime_error.
ProblemDocument ParseProblemFile(const std::filesystem::path& path);

// Every parameter normalized to a trapezoid; sidecar files are read here.
DistributionProblem Normalize(const DistributionDocument& doc,
                              const ConfidenceLevels& levels);

// The Gaussian model when every parameter is crisp (sigma 0) or Gaussian;
// otherwise throws ProblemFormatError naming the first other parameter.
GaussianModel ToGaussianModel(const DistributionDocument& doc);

// Inverse of ParseProblem. Sidecar paths are rewritten relative to
// `target_dir`.
nlohmann::json ExportProblem(const DistributionDocument& doc,
                             const std::filesystem::path& target_dir);
nlohmann::json ExportProblem(const TransportDocument& doc);

}  // namespace fuzzytp::cli

#endif  // FUZZYTP_CLI_PROBLEM_IO_H_
