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

// Dense two-phase primal simplex for small linear programs
//
//   max / min  c'x   s.t.  A_k x  {<=, >=, =}  rhs_k,   x >= 0.
//
// Pricing is Dantzig's largest coefficient rule. After 2 (n + m)
// consecutive degenerate pivots the solver switches to Bland's
// smallest-index rule for both entering and leaving choices, which
// guarantees termination.

#ifndef FUZZYTP_SIMPLEX_H_
#define FUZZYTP_SIMPLEX_H_

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace fuzzytp {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMaximize, kMinimize };

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

struct LinearProgram {
  Sense sense = Sense::kMaximize;
  std::vector<double> objective;
  std::vector<Constraint> constraints;

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }

  void AddConstraint(std::vector<double> coefficients, Relation relation,
                     double rhs) {
    constraints.push_back({std::move(coefficients), relation, rhs});
  }

  // Throws std::invalid_argument on a coefficient vector of the wrong length
  // or a non-finite entry.
  void Validate() const;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };
std::string_view ToString(SolveStatus status);
std::ostream& operator<<(std::ostream& os, SolveStatus status);

struct SimplexSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  // Primal values; filled only when status is kOptimal.
  std::vector<double> x;
  double objective_value = 0.0;
  int iterations = 0;
};

struct SimplexOptions {
  double pivot_tolerance = 1e-9;
  double feasibility_tolerance = 1e-7;
  int max_iterations = 100000;
};

// Validates `lp` first (throws std::invalid_argument), then solves.
// Throws std::runtime_error if max_iterations is exhausted.
SimplexSolution Solve(const LinearProgram& lp,
                      const SimplexOptions& options = {});

// Largest violation of any constraint or of x >= 0 at the given point.
double MaxConstraintViolation(const LinearProgram& lp,
                              std::span<const double> x);

double EvaluateObjective(const LinearProgram& lp, std::span<const double> x);

}  // namespace fuzzytp

#endif  // FUZZYTP_SIMPLEX_H_
