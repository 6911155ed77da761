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

#include "fuzzytp/fuzzy_solver.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

namespace fuzzytp {

CornerInstances MakeCornerInstances(const DistributionProblem& problem,
                                    double alpha) {
  problem.Validate();
  const int m = problem.num_wholesalers();
  const int n = problem.num_consumers();
  const Grid<Fuzzy> z = ProfitCoefficients(problem);

  CornerInstances corners;
  CrispInstance& opt = corners.optimistic;
  CrispInstance& pes = corners.pessimistic;
  auto cut_into = [alpha](const std::vector<Fuzzy>& params,
                          std::vector<double>& upper_side,
                          std::vector<double>& lower_side, bool upper_first) {
    for (const Fuzzy& f : params) {
      const Interval cut = f.AlphaCut(alpha);
      upper_side.push_back(upper_first ? cut.hi() : cut.lo());
      lower_side.push_back(upper_first ? cut.lo() : cut.hi());
    }
  };
  cut_into(problem.supply_max, opt.supply_max, pes.supply_max, true);
  cut_into(problem.demand_max, opt.demand_max, pes.demand_max, true);
  cut_into(problem.purchase_min, opt.purchase_min, pes.purchase_min, false);
  cut_into(problem.sale_min, opt.sale_min, pes.sale_min, false);
  opt.profit = Grid<double>(m, n);
  pes.profit = Grid<double>(m, n);
  for (std::size_t k = 0; k < z.size(); ++k) {
    const Interval cut = z.values()[k].AlphaCut(alpha);
    opt.profit.values()[k] = cut.hi();
    pes.profit.values()[k] = cut.lo();
  }
  return corners;
}

RepairResult RepairBounds(CrispInstance instance) {
  instance.Validate();
  bool repaired = false;
  for (int i = 0; i < instance.num_wholesalers(); ++i) {
    if (instance.purchase_min[i] > instance.supply_max[i]) {
      instance.purchase_min[i] = instance.supply_max[i];
      repaired = true;
    }
  }
  for (int j = 0; j < instance.num_consumers(); ++j) {
    if (instance.sale_min[j] > instance.demand_max[j]) {
      instance.sale_min[j] = instance.demand_max[j];
      repaired = true;
    }
  }
  return {std::move(instance), repaired};
}

bool FuzzySolution::all_infeasible() const {
  return std::none_of(levels.begin(), levels.end(),
                      [](const LevelSolution& l) { return l.feasible; });
}

namespace {

LevelSolution SolveLevel(const DistributionProblem& problem, double alpha,
                         const SimplexOptions& simplex) {
  LevelSolution level;
  level.alpha = alpha;
  const CornerInstances corners = MakeCornerInstances(problem, alpha);
  RepairResult opt = RepairBounds(corners.optimistic);
  RepairResult pes = RepairBounds(corners.pessimistic);
  level.repaired = opt.repaired || pes.repaired;

  const SimplexSolution opt_sol = Solve(ToLinearProgram(opt.instance), simplex);
  const SimplexSolution pes_sol = Solve(ToLinearProgram(pes.instance), simplex);
  if (opt_sol.status == SolveStatus::kUnbounded ||
      pes_sol.status == SolveStatus::kUnbounded) {
    // Every variable is capped by a_i, so this is a solver failure.
    throw std::runtime_error("corner LP reported unbounded");
  }
  if (opt_sol.status != SolveStatus::kOptimal ||
      pes_sol.status != SolveStatus::kOptimal) {
    return level;
  }
  level.feasible = true;
  level.optimistic_value = opt_sol.objective_value;
  level.pessimistic_value = pes_sol.objective_value;
  level.benefit = Interval::Make(
      std::min(pes_sol.objective_value, opt_sol.objective_value),
      std::max(pes_sol.objective_value, opt_sol.objective_value));
  const int m = problem.num_wholesalers();
  const int n = problem.num_consumers();
  Grid<Interval> shipments(m, n);
  for (std::size_t k = 0; k < shipments.size(); ++k) {
    const double a = opt_sol.x[k];
    const double b = pes_sol.x[k];
    shipments.values()[k] = Interval::Make(std::min(a, b), std::max(a, b));
  }
  level.shipments = std::move(shipments);
  return level;
}

}  // namespace

FuzzySolution SolveFuzzy(const DistributionProblem& problem,
                         const AlphaGrid& grid,
                         const FuzzySolveOptions& options) {
  problem.Validate();
  FuzzySolution solution;
  solution.grid = grid;
  solution.num_wholesalers = problem.num_wholesalers();
  solution.num_consumers = problem.num_consumers();
  const int count = grid.size();
  solution.levels.resize(count);
  std::vector<std::exception_ptr> errors(count);

  const bool parallel = options.execution == Execution::kParallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int k = 0; k < count; ++k) {
    try {
      solution.levels[k] = SolveLevel(problem, grid[k], options.simplex);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  EnforceNesting(solution);
  return solution;
}

bool EnforceNesting(FuzzySolution& solution) {
  bool widened = false;
  const LevelSolution* above = nullptr;
  for (auto it = solution.levels.rbegin(); it != solution.levels.rend(); ++it) {
    LevelSolution& level = *it;
    if (!level.feasible) continue;
    if (above != nullptr) {
      const Interval hull = level.benefit->Hull(*above->benefit);
      if (!(hull == *level.benefit)) {
        level.benefit = hull;
        widened = true;
      }
      Grid<Interval>& mine = *level.shipments;
      const Grid<Interval>& theirs = *above->shipments;
      for (std::size_t k = 0; k < mine.size(); ++k) {
        const Interval h = mine.values()[k].Hull(theirs.values()[k]);
        if (!(h == mine.values()[k])) {
          mine.values()[k] = h;
          widened = true;
        }
      }
    }
    above = &level;
  }
  solution.nesting_adjusted = solution.nesting_adjusted || widened;
  return widened;
}

Interval LevelInterval(const LevelSolution& level, const Quantity& quantity) {
  if (!level.feasible) {
    throw std::runtime_error("level alpha=" + std::to_string(level.alpha) +
                             " is infeasible");
  }
  if (!quantity.is_shipment) return *level.benefit;
  return level.shipments->at(quantity.row, quantity.col);
}

TrapezoidalFuzzyNumber FitTrapezoid(const FuzzySolution& solution,
                                    const Quantity& quantity) {
  if (solution.levels.empty()) {
    throw std::runtime_error("fuzzy solution has no levels");
  }
  const LevelSolution& bottom = solution.levels.front();
  const LevelSolution& top = solution.levels.back();
  if (bottom.alpha != 0.0 || top.alpha != 1.0) {
    throw std::runtime_error("fuzzy solution lacks the alpha=0 or alpha=1 level");
  }
  const Interval support = LevelInterval(bottom, quantity);
  const Interval core = LevelInterval(top, quantity);
  // Nesting makes these ordered up to rounding in the hull.
  return TrapezoidalFuzzyNumber::Make(
      std::min(support.lo(), core.lo()), core.lo(), core.hi(),
      std::max(support.hi(), core.hi()));
}

RankReport RankFuzzy(const TrapezoidalFuzzyNumber& first,
                     const TrapezoidalFuzzyNumber& second,
                     const AlphaGrid& grid) {
  RankReport report;
  report.prob_first_geq_second = ProbGeqFuzzy(first, second, grid);
  const double margin = report.prob_first_geq_second - 0.5;
  if (std::abs(margin) <= kEndpointTolerance) {
    report.preference = Preference::kTie;
  } else {
    report.preference = margin > 0.0 ? Preference::kFirst : Preference::kSecond;
  }
  return report;
}

}  // namespace fuzzytp
