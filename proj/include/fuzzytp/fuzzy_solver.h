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

// Fuzzy optimization of the distributor model by alpha-cut decomposition.
//
// At each alpha level every fuzzy parameter becomes an interval and the
// fuzzy program becomes an interval LP. Its optimal value is nondecreasing
// in the capacities a, b and in the profits z (x >= 0), and nonincreasing
// in the contract minimums p, q. The value interval is therefore spanned by
// two crisp LPs:
//
//   optimistic : z, a, b at upper endpoints; p, q at lower endpoints
//   pessimistic: z, a, b at lower endpoints; p, q at upper endpoints
//
// Wide cuts can make the pessimistic corner self-contradictory (p_i above
// a_i). Such corners are repaired by clipping p_i <= a_i and q_j <= b_j,
// and the level is flagged.
//
// Shipment intervals are the envelope of the two corner optima. They bound
// what the corner plans do, not the full set of optimal plans over the
// parameter box.

#ifndef FUZZYTP_FUZZY_SOLVER_H_
#define FUZZYTP_FUZZY_SOLVER_H_

#include <optional>
#include <utility>
#include <vector>

#include "fuzzytp/distribution_model.h"
#include "fuzzytp/execution.h"
#include "fuzzytp/fuzzy_number.h"
#include "fuzzytp/grid.h"
#include "fuzzytp/interval.h"
#include "fuzzytp/simplex.h"

namespace fuzzytp {

struct CornerInstances {
  CrispInstance optimistic;
  CrispInstance pessimistic;
};

CornerInstances MakeCornerInstances(const DistributionProblem& problem,
                                    double alpha);

struct RepairResult {
  CrispInstance instance;
  bool repaired = false;
};

// p_i <- min(p_i, a_i), q_j <- min(q_j, b_j).
RepairResult RepairBounds(CrispInstance instance);

struct LevelSolution {
  double alpha = 0.0;
  bool feasible = false;
  // Set when either corner needed RepairBounds.
  bool repaired = false;
  // Corner optima; meaningful only when feasible.
  double pessimistic_value = 0.0;
  double optimistic_value = 0.0;
  // Present only when feasible.
  std::optional<Interval> benefit;
  std::optional<Grid<Interval>> shipments;
};

struct FuzzySolution {
  AlphaGrid grid = AlphaGrid::Uniform();
  int num_wholesalers = 0;
  int num_consumers = 0;
  // One entry per grid level, ascending alpha.
  std::vector<LevelSolution> levels;
  // Set when EnforceNesting had to widen some interval.
  bool nesting_adjusted = false;

  bool all_infeasible() const;
};

struct FuzzySolveOptions {
  Execution execution = Execution::kParallel;
  SimplexOptions simplex;
};

// Solves both corners at every level, then enforces nesting. Infeasible
// levels are reported in the result, never thrown.
FuzzySolution SolveFuzzy(const DistributionProblem& problem,
                         const AlphaGrid& grid,
                         const FuzzySolveOptions& options = {});

// Sweeping from the top level down, widens each feasible level's intervals
// to the hull of themselves and the nearest feasible level above. Returns
// true if anything was widened (also recorded in nesting_adjusted).
bool EnforceNesting(FuzzySolution& solution);

// Identifies the benefit D or a shipment x_ij.
struct Quantity {
  static Quantity Benefit() { return {}; }
  static Quantity Shipment(int i, int j) { return {true, i, j}; }

  bool is_shipment = false;
  int row = -1;
  int col = -1;
};

Interval LevelInterval(const LevelSolution& level, const Quantity& quantity);

// (support.lo, core.lo, core.hi, support.hi) from the alpha = 0 and
// alpha = 1 levels. Throws std::runtime_error if either is infeasible.
TrapezoidalFuzzyNumber FitTrapezoid(const FuzzySolution& solution,
                                    const Quantity& quantity);

enum class Preference { kFirst, kSecond, kTie };

struct RankReport {
  double prob_first_geq_second = 0.5;
  Preference preference = Preference::kTie;
};

// First is preferred iff ProbGeqFuzzy > 0.5, second iff < 0.5.
RankReport RankFuzzy(const TrapezoidalFuzzyNumber& first,
                     const TrapezoidalFuzzyNumber& second,
                     const AlphaGrid& grid);

}  // namespace fuzzytp

#endif  // FUZZYTP_FUZZY_SOLVER_H_
