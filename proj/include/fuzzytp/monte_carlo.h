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

// Probabilistic treatment of the distributor model: every parameter is an
// independent Gaussian, each scenario is solved as a crisp LP, and the
// optimal benefit D and shipments x_ij are collected into frequency
// distributions.
//
// Scenario s draws its randomness from an engine seeded by a hash of
// (seed, s) only, so any partition of the step range (threads, partial
// runs) reproduces the serial run bit for bit.

#ifndef FUZZYTP_MONTE_CARLO_H_
#define FUZZYTP_MONTE_CARLO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzzytp/distribution_model.h"
#include "fuzzytp/execution.h"
#include "fuzzytp/fuzzy_number.h"
#include "fuzzytp/fuzzy_solver.h"
#include "fuzzytp/grid.h"
#include "fuzzytp/ingest.h"
#include "fuzzytp/simplex.h"

namespace fuzzytp {

struct GaussianSpec {
  double mean = 0.0;
  double sigma = 0.0;  // >= 0

  friend bool operator==(const GaussianSpec&, const GaussianSpec&) = default;
};

// Gaussian counterpart of DistributionProblem, one spec per parameter.
struct GaussianModel {
  std::vector<GaussianSpec> supply_max;
  std::vector<GaussianSpec> demand_max;
  std::vector<GaussianSpec> purchase_min;
  std::vector<GaussianSpec> sale_min;
  std::vector<GaussianSpec> purchase_price_reduced;
  std::vector<GaussianSpec> sale_price_reduced;
  Grid<GaussianSpec> transport_cost;

  int num_wholesalers() const { return static_cast<int>(supply_max.size()); }
  int num_consumers() const { return static_cast<int>(demand_max.size()); }
  // Dimension checks as for DistributionProblem, plus sigma >= 0.
  void Validate() const;

  // Every parameter converted with GaussianToTrapezoid.
  DistributionProblem ToFuzzy(const ConfidenceLevels& levels = {}) const;
};

// Draws scenario `step`: a, b, p, q, k, r in that order (index order within
// each), then c row-major, each as mean + sigma * N(0, 1). Draws are never
// clamped. Pure function of (model, seed, step).
CrispInstance SampleInstance(const GaussianModel& model, std::uint64_t seed,
                             std::uint64_t step);

// Outcome of one scenario.
struct ScenarioOutcome {
  std::uint64_t step = 0;
  bool feasible = false;
  double benefit = 0.0;
  std::vector<double> shipments;  // row-major M x N, empty if infeasible
};

// Raw per-step results for a contiguous step range, in step order.
struct McAccumulator {
  int num_wholesalers = 0;
  int num_consumers = 0;
  std::uint64_t seed = 0;
  std::uint64_t first_step = 0;
  std::vector<ScenarioOutcome> outcomes;
};

// Concatenates two accumulators covering adjacent step ranges (first then
// second). Throws std::invalid_argument on seed/dimension mismatch or a
// gap between the ranges.
McAccumulator Merge(McAccumulator first, const McAccumulator& second);

struct QuantitySummary {
  std::string name;  // "D" or ShipmentLabel(i, j)
  BinnedHistogram histogram;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n - 1)
  std::vector<double> samples;  // feasible-step values in step order
};

struct McResult {
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::uint64_t infeasible_count = 0;
  int num_wholesalers = 0;
  int num_consumers = 0;
  QuantitySummary benefit;
  Grid<QuantitySummary> shipments;
};

struct McOptions {
  std::uint64_t steps = 10000;
  std::uint64_t seed = 42;
  Execution execution = Execution::kParallel;
  SimplexOptions simplex;
};

// Solves scenarios first_step .. first_step + count - 1.
McAccumulator RunRange(const GaussianModel& model, std::uint64_t first_step,
                       std::uint64_t count, std::uint64_t seed,
                       Execution execution = Execution::kParallel,
                       const SimplexOptions& simplex = {});

// Builds histograms and moments. Throws std::invalid_argument if the
// accumulator does not start at step 0.
McResult Finalize(const McAccumulator& accumulator);

// RunRange(0, steps) + Finalize. steps == 0 throws std::invalid_argument.
McResult RunMonteCarlo(const GaussianModel& model, const McOptions& options);

// Freedman-Diaconis bin width over the samples with at least 20 bins
// (capped at 10000). A constant sample yields the point-mass histogram
// [v, v]. Throws on empty input.
BinnedHistogram BuildHistogram(const std::vector<double>& samples);

struct QuantityComparison {
  std::string name;
  TrapezoidalFuzzyNumber fuzzy;
  TrapezoidalFuzzyNumber monte_carlo;
  // fuzzy support width / MC support width; 1 when both are zero and
  // +infinity when only the MC width is zero.
  double support_width_ratio = 1.0;
  bool mc_support_within_fuzzy = false;
};

struct ComparisonReport {
  ConfidenceLevels levels;
  QuantityComparison benefit;
  Grid<QuantityComparison> shipments;
};

// Converts each MC histogram to a trapezoid (ToTrapezoid on its CDF) and
// sets it against the fuzzy trapezoid of the same quantity. Throws
// std::invalid_argument on dimension mismatch and std::runtime_error when
// a side has nothing to compare (no feasible samples, infeasible alpha=0
// or alpha=1 level).
ComparisonReport Compare(const FuzzySolution& fuzzy, const McResult& mc,
                         const ConfidenceLevels& levels = {});

}  // namespace fuzzytp

#endif  // FUZZYTP_MONTE_CARLO_H_
