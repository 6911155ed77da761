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

#include "fuzzytp/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <stdexcept>

namespace fuzzytp {

namespace {

constexpr int kMinBins = 20;
constexpr int kMaxBins = 10000;

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void RequireSpecs(const std::vector<GaussianSpec>& specs, int expected,
                  const char* name) {
  if (static_cast<int>(specs.size()) != expected) {
    throw std::invalid_argument(std::string(name) + " has " +
                                std::to_string(specs.size()) +
                                " entries, expected " + std::to_string(expected));
  }
  for (const GaussianSpec& s : specs) {
    if (!std::isfinite(s.mean) || !(s.sigma >= 0.0) || !std::isfinite(s.sigma)) {
      throw std::invalid_argument(std::string(name) +
                                  ": gaussian needs finite mean and sigma >= 0");
    }
  }
}

std::vector<Fuzzy> ToFuzzyVector(const std::vector<GaussianSpec>& specs,
                                 const ConfidenceLevels& levels) {
  std::vector<Fuzzy> out;
  out.reserve(specs.size());
  for (const GaussianSpec& s : specs) {
    out.push_back(GaussianToTrapezoid(s.mean, s.sigma, levels));
  }
  return out;
}

ScenarioOutcome SolveScenario(const GaussianModel& model, std::uint64_t seed,
                              std::uint64_t step, const SimplexOptions& simplex) {
  ScenarioOutcome outcome;
  outcome.step = step;
  const CrispInstance instance = SampleInstance(model, seed, step);
  const SimplexSolution sol = Solve(ToLinearProgram(instance), simplex);
  if (sol.status != SolveStatus::kOptimal) return outcome;
  outcome.feasible = true;
  outcome.benefit = sol.objective_value;
  outcome.shipments = sol.x;
  return outcome;
}

double Mean(const std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += x;
  return v.empty() ? 0.0 : total / static_cast<double>(v.size());
}

double SampleStddev(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Linear interpolation between order statistics.
double SortedQuantile(const std::vector<double>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const std::size_t k = static_cast<std::size_t>(std::floor(pos));
  if (k + 1 >= sorted.size()) return sorted.back();
  return sorted[k] + (pos - static_cast<double>(k)) * (sorted[k + 1] - sorted[k]);
}

QuantitySummary Summarize(std::string name, std::vector<double> samples) {
  QuantitySummary s;
  s.name = std::move(name);
  if (!samples.empty()) {
    s.histogram = BuildHistogram(samples);
    s.mean = Mean(samples);
    s.stddev = SampleStddev(samples, s.mean);
  }
  s.samples = std::move(samples);
  return s;
}

QuantityComparison CompareQuantity(std::string name,
                                   const TrapezoidalFuzzyNumber& fuzzy,
                                   const QuantitySummary& mc,
                                   const ConfidenceLevels& levels) {
  if (mc.samples.empty()) {
    throw std::runtime_error("Monte Carlo run has no feasible samples for " +
                             name);
  }
  QuantityComparison c;
  c.name = std::move(name);
  c.fuzzy = fuzzy;
  c.monte_carlo = ToTrapezoid(EmpiricalCdf::FromHistogram(mc.histogram), levels);
  const double fuzzy_width = c.fuzzy.d() - c.fuzzy.a();
  const double mc_width = c.monte_carlo.d() - c.monte_carlo.a();
  if (mc_width <= kEndpointTolerance) {
    c.support_width_ratio = fuzzy_width <= kEndpointTolerance
                                ? 1.0
                                : std::numeric_limits<double>::infinity();
  } else {
    c.support_width_ratio = fuzzy_width / mc_width;
  }
  c.mc_support_within_fuzzy = c.fuzzy.support().Contains(c.monte_carlo.support());
  return c;
}

}  // namespace

void GaussianModel::Validate() const {
  const int m = num_wholesalers();
  const int n = num_consumers();
  if (m < 1 || n < 1) {
    throw std::invalid_argument("gaussian model needs M, N >= 1");
  }
  RequireSpecs(supply_max, m, "supply_max");
  RequireSpecs(demand_max, n, "demand_max");
  RequireSpecs(purchase_min, m, "purchase_min");
  RequireSpecs(sale_min, n, "sale_min");
  RequireSpecs(purchase_price_reduced, m, "purchase_price_reduced");
  RequireSpecs(sale_price_reduced, n, "sale_price_reduced");
  if (transport_cost.rows() != m || transport_cost.cols() != n) {
    throw std::invalid_argument("transport_cost must be M x N");
  }
  RequireSpecs(transport_cost.values(), m * n, "transport_cost");
}

DistributionProblem GaussianModel::ToFuzzy(const ConfidenceLevels& levels) const {
  Validate();
  DistributionProblem p;
  p.supply_max = ToFuzzyVector(supply_max, levels);
  p.demand_max = ToFuzzyVector(demand_max, levels);
  p.purchase_min = ToFuzzyVector(purchase_min, levels);
  p.sale_min = ToFuzzyVector(sale_min, levels);
  p.purchase_price_reduced = ToFuzzyVector(purchase_price_reduced, levels);
  p.sale_price_reduced = ToFuzzyVector(sale_price_reduced, levels);
  p.transport_cost = Grid<Fuzzy>(num_wholesalers(), num_consumers());
  p.transport_cost.values() = ToFuzzyVector(transport_cost.values(), levels);
  return p;
}

CrispInstance SampleInstance(const GaussianModel& model, std::uint64_t seed,
                             std::uint64_t step) {
  std::mt19937_64 engine(SplitMix64(seed ^ SplitMix64(step)));
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&](const std::vector<GaussianSpec>& specs) {
    std::vector<double> out;
    out.reserve(specs.size());
    for (const GaussianSpec& s : specs) {
      out.push_back(s.mean + s.sigma * normal(engine));
    }
    return out;
  };
  CrispInstance inst;
  inst.supply_max = draw(model.supply_max);
  inst.demand_max = draw(model.demand_max);
  inst.purchase_min = draw(model.purchase_min);
  inst.sale_min = draw(model.sale_min);
  const std::vector<double> k = draw(model.purchase_price_reduced);
  const std::vector<double> r = draw(model.sale_price_reduced);
  Grid<double> c(model.num_wholesalers(), model.num_consumers());
  c.values() = draw(model.transport_cost.values());
  inst.profit = ProfitCoefficients(k, r, c);
  return inst;
}

McAccumulator RunRange(const GaussianModel& model, std::uint64_t first_step,
                       std::uint64_t count, std::uint64_t seed,
                       Execution execution, const SimplexOptions& simplex) {
  model.Validate();
  McAccumulator acc;
  acc.num_wholesalers = model.num_wholesalers();
  acc.num_consumers = model.num_consumers();
  acc.seed = seed;
  acc.first_step = first_step;
  acc.outcomes.resize(count);
  std::vector<std::exception_ptr> errors(count);

  const std::int64_t total = static_cast<std::int64_t>(count);
  const bool parallel = execution == Execution::kParallel;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t t = 0; t < total; ++t) {
    try {
      acc.outcomes[t] = SolveScenario(model, seed, first_step + t, simplex);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return acc;
}

McAccumulator Merge(McAccumulator first, const McAccumulator& second) {
  if (first.seed != second.seed ||
      first.num_wholesalers != second.num_wholesalers ||
      first.num_consumers != second.num_consumers) {
    throw std::invalid_argument("cannot merge runs of different models/seeds");
  }
  if (first.first_step + first.outcomes.size() != second.first_step) {
    throw std::invalid_argument("merged step ranges must be adjacent");
  }
  first.outcomes.insert(first.outcomes.end(), second.outcomes.begin(),
                        second.outcomes.end());
  return first;
}

BinnedHistogram BuildHistogram(const std::vector<double>& samples) {
  if (samples.empty()) throw std::invalid_argument("histogram of no samples");
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const double hi = sorted.back();
  const double n = static_cast<double>(sorted.size());
  if (!(hi > lo)) return BinnedHistogram{{lo, lo}, {n}};

  const double range = hi - lo;
  const double iqr = SortedQuantile(sorted, 0.75) - SortedQuantile(sorted, 0.25);
  const double width = 2.0 * iqr / std::cbrt(n);
  int bins = kMinBins;
  if (width > 0.0) {
    const double fd = std::ceil(range / width);
    bins = static_cast<int>(std::clamp(fd, double{kMinBins}, double{kMaxBins}));
  }
  BinnedHistogram h;
  h.bin_edges.resize(bins + 1);
  for (int k = 0; k <= bins; ++k) h.bin_edges[k] = lo + range * k / bins;
  h.bin_edges.back() = hi;
  h.counts.assign(bins, 0.0);
  for (double v : sorted) {
    int k = static_cast<int>(std::floor((v - lo) / range * bins));
    h.counts[std::clamp(k, 0, bins - 1)] += 1.0;
  }
  return h;
}

McResult Finalize(const McAccumulator& accumulator) {
  if (accumulator.first_step != 0) {
    throw std::invalid_argument("accumulator must cover steps from 0");
  }
  const int m = accumulator.num_wholesalers;
  const int n = accumulator.num_consumers;
  McResult result;
  result.steps = accumulator.outcomes.size();
  result.seed = accumulator.seed;
  result.num_wholesalers = m;
  result.num_consumers = n;

  std::vector<double> benefit;
  std::vector<std::vector<double>> shipments(static_cast<std::size_t>(m) * n);
  for (const ScenarioOutcome& o : accumulator.outcomes) {
    if (!o.feasible) {
      ++result.infeasible_count;
      continue;
    }
    benefit.push_back(o.benefit);
    for (std::size_t k = 0; k < shipments.size(); ++k) {
      shipments[k].push_back(o.shipments[k]);
    }
  }
  result.benefit = Summarize("D", std::move(benefit));
  result.shipments = Grid<QuantitySummary>(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      result.shipments(i, j) =
          Summarize(ShipmentLabel(i, j), std::move(shipments[i * n + j]));
    }
  }
  return result;
}

McResult RunMonteCarlo(const GaussianModel& model, const McOptions& options) {
  if (options.steps == 0) {
    throw std::invalid_argument("Monte Carlo needs at least one step");
  }
  return Finalize(RunRange(model, 0, options.steps, options.seed,
                           options.execution, options.simplex));
}

ComparisonReport Compare(const FuzzySolution& fuzzy, const McResult& mc,
                         const ConfidenceLevels& levels) {
  levels.Validate();
  if (fuzzy.num_wholesalers != mc.num_wholesalers ||
      fuzzy.num_consumers != mc.num_consumers) {
    throw std::invalid_argument(
        "fuzzy and Monte Carlo results have different dimensions");
  }
  ComparisonReport report;
  report.levels = levels;
  report.benefit = CompareQuantity(
      "D", FitTrapezoid(fuzzy, Quantity::Benefit()), mc.benefit, levels);
  report.shipments = Grid<QuantityComparison>(mc.num_wholesalers, mc.num_consumers);
  for (int i = 0; i < mc.num_wholesalers; ++i) {
    for (int j = 0; j < mc.num_consumers; ++j) {
      report.shipments(i, j) = CompareQuantity(
          ShipmentLabel(i, j), FitTrapezoid(fuzzy, Quantity::Shipment(i, j)),
          mc.shipments(i, j), levels);
    }
  }
  return report;
}

}  // namespace fuzzytp
