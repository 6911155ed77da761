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

#include "fuzzytp/simplex.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fuzzytp {

void LinearProgram::Validate() const {
  const std::size_t n = objective.size();
  if (n == 0) throw std::invalid_argument("LP has no variables");
  for (double c : objective) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("LP objective has a non-finite entry");
    }
  }
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const Constraint& row = constraints[k];
    if (row.coefficients.size() != n) {
      throw std::invalid_argument(
          "LP constraint " + std::to_string(k) + " has " +
          std::to_string(row.coefficients.size()) + " coefficients, expected " +
          std::to_string(n));
    }
    if (!std::isfinite(row.rhs) ||
        !std::all_of(row.coefficients.begin(), row.coefficients.end(),
                     [](double v) { return std::isfinite(v); })) {
      throw std::invalid_argument("LP constraint " + std::to_string(k) +
                                  " has a non-finite entry");
    }
  }
}

std::string_view ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

std::ostream& operator<<(std::ostream& os, SolveStatus status) {
  return os << ToString(status);
}

double EvaluateObjective(const LinearProgram& lp, std::span<const double> x) {
  double value = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) value += lp.objective[j] * x[j];
  return value;
}

double MaxConstraintViolation(const LinearProgram& lp,
                              std::span<const double> x) {
  double worst = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) worst = std::max(worst, -x[j]);
  for (const Constraint& row : lp.constraints) {
    double lhs = 0.0;
    for (int j = 0; j < lp.num_variables(); ++j) {
      lhs += row.coefficients[j] * x[j];
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

namespace {

enum class ColumnKind { kStructural, kSlack, kArtificial };

// Dense tableau. Rows 0..m-1 hold B^-1 [A | b]; `reduced_` holds the
// reduced-cost row of the current phase's maximization objective, with the
// objective value in its last entry.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& options)
      : options_(options), num_structural_(lp.num_variables()) {
    const int m = lp.num_constraints();
    // Column layout: structural, then one slack/surplus per inequality,
    // then one artificial per >= or = row.
    std::vector<Relation> relations(m);
    std::vector<double> sign(m, 1.0);
    int num_slack = 0;
    int num_artificial = 0;
    for (int k = 0; k < m; ++k) {
      Relation rel = lp.constraints[k].relation;
      if (lp.constraints[k].rhs < 0.0) {
        sign[k] = -1.0;
        if (rel == Relation::kLessEqual) {
          rel = Relation::kGreaterEqual;
        } else if (rel == Relation::kGreaterEqual) {
          rel = Relation::kLessEqual;
        }
      }
      relations[k] = rel;
      if (rel != Relation::kEqual) ++num_slack;
      if (rel != Relation::kLessEqual) ++num_artificial;
    }
    num_columns_ = num_structural_ + num_slack + num_artificial;
    kinds_.assign(num_columns_, ColumnKind::kStructural);
    std::fill(kinds_.begin() + num_structural_,
              kinds_.begin() + num_structural_ + num_slack, ColumnKind::kSlack);
    std::fill(kinds_.begin() + num_structural_ + num_slack, kinds_.end(),
              ColumnKind::kArtificial);

    rows_.assign(m, std::vector<double>(num_columns_ + 1, 0.0));
    basis_.assign(m, -1);
    int next_slack = num_structural_;
    int next_artificial = num_structural_ + num_slack;
    for (int k = 0; k < m; ++k) {
      std::vector<double>& row = rows_[k];
      for (int j = 0; j < num_structural_; ++j) {
        row[j] = sign[k] * lp.constraints[k].coefficients[j];
      }
      row[num_columns_] = sign[k] * lp.constraints[k].rhs;
      switch (relations[k]) {
        case Relation::kLessEqual:
          row[next_slack] = 1.0;
          basis_[k] = next_slack++;
          break;
        case Relation::kGreaterEqual:
          row[next_slack++] = -1.0;
          row[next_artificial] = 1.0;
          basis_[k] = next_artificial++;
          break;
        case Relation::kEqual:
          row[next_artificial] = 1.0;
          basis_[k] = next_artificial++;
          break;
      }
    }
    stall_limit_ = 2 * (num_structural_ + m);
  }

  bool has_artificials() const {
    return std::find(kinds_.begin(), kinds_.end(), ColumnKind::kArtificial) !=
           kinds_.end();
  }

  // Maximizes sum(cost_j x_j) over the current basis. `allow_artificial`
  // controls whether artificial columns may enter. Returns false if
  // unbounded.
  bool Optimize(const std::vector<double>& cost, bool allow_artificial) {
    cost_ = cost;
    RebuildReducedCosts();
    int stalled = 0;
    for (;;) {
      const bool bland = stalled > stall_limit_;
      const int entering = ChooseEntering(bland, allow_artificial);
      if (entering < 0) return true;
      const int leaving = ChooseLeaving(entering);
      if (leaving < 0) return false;
      const double step = std::max(0.0, rows_[leaving][num_columns_]) /
                          rows_[leaving][entering];
      stalled = step <= options_.pivot_tolerance ? stalled + 1 : 0;
      Pivot(leaving, entering);
      if (++iterations_ > options_.max_iterations) {
        throw std::runtime_error("simplex iteration limit exceeded");
      }
    }
  }

  double objective_value() const { return reduced_[num_columns_]; }

  // Pivots basic artificials out of the basis after a successful phase 1;
  // rows with no eligible pivot are redundant and are dropped.
  void EvictArtificials() {
    for (int r = 0; r < static_cast<int>(rows_.size());) {
      if (kinds_[basis_[r]] != ColumnKind::kArtificial) {
        ++r;
        continue;
      }
      int best = -1;
      double best_abs = options_.pivot_tolerance;
      for (int j = 0; j < num_columns_; ++j) {
        if (kinds_[j] == ColumnKind::kArtificial) continue;
        if (std::abs(rows_[r][j]) > best_abs) {
          best_abs = std::abs(rows_[r][j]);
          best = j;
        }
      }
      if (best >= 0) {
        Pivot(r, best);
        ++r;
      } else {
        rows_.erase(rows_.begin() + r);
        basis_.erase(basis_.begin() + r);
      }
    }
  }

  std::vector<double> ArtificialCost() const {
    std::vector<double> cost(num_columns_, 0.0);
    for (int j = 0; j < num_columns_; ++j) {
      if (kinds_[j] == ColumnKind::kArtificial) cost[j] = -1.0;
    }
    return cost;
  }

  std::vector<double> StructuralCost(const LinearProgram& lp) const {
    std::vector<double> cost(num_columns_, 0.0);
    const double sign = lp.sense == Sense::kMaximize ? 1.0 : -1.0;
    for (int j = 0; j < num_structural_; ++j) cost[j] = sign * lp.objective[j];
    return cost;
  }

  std::vector<double> StructuralValues() const {
    std::vector<double> x(num_structural_, 0.0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < num_structural_) {
        x[basis_[r]] = std::max(0.0, rows_[r][num_columns_]);
      }
    }
    return x;
  }

  int iterations() const { return iterations_; }

 private:
  void RebuildReducedCosts() {
    reduced_.assign(num_columns_ + 1, 0.0);
    for (int j = 0; j < num_columns_; ++j) reduced_[j] = -cost_[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const double cb = cost_[basis_[r]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= num_columns_; ++j) reduced_[j] += cb * rows_[r][j];
    }
  }

  int ChooseEntering(bool bland, bool allow_artificial) const {
    int best = -1;
    double best_value = -options_.pivot_tolerance;
    for (int j = 0; j < num_columns_; ++j) {
      if (!allow_artificial && kinds_[j] == ColumnKind::kArtificial) continue;
      if (reduced_[j] < best_value) {
        if (bland) return j;
        best_value = reduced_[j];
        best = j;
      }
    }
    return best;
  }

  // Minimum ratio test; ties go to the smallest basic column index.
  int ChooseLeaving(int entering) const {
    int best = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      const double a = rows_[r][entering];
      if (a <= options_.pivot_tolerance) continue;
      const double ratio = std::max(0.0, rows_[r][num_columns_]) / a;
      if (best < 0) {
        best = r;
        best_ratio = ratio;
        continue;
      }
      const double tie = 1e-12 * std::max(1.0, best_ratio);
      if (ratio < best_ratio - tie ||
          (ratio <= best_ratio + tie && basis_[r] < basis_[best])) {
        best = r;
        best_ratio = std::min(ratio, best_ratio);
      }
    }
    return best;
  }

  void Pivot(int pivot_row, int pivot_col) {
    std::vector<double>& prow = rows_[pivot_row];
    const double inv = 1.0 / prow[pivot_col];
    for (double& v : prow) v *= inv;
    prow[pivot_col] = 1.0;
    auto eliminate = [&](std::vector<double>& row) {
      const double factor = row[pivot_col];
      if (factor == 0.0) return;
      for (int j = 0; j <= num_columns_; ++j) row[j] -= factor * prow[j];
      row[pivot_col] = 0.0;
    };
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (r != pivot_row) eliminate(rows_[r]);
    }
    eliminate(reduced_);
    basis_[pivot_row] = pivot_col;
  }

  SimplexOptions options_;
  int num_structural_ = 0;
  int num_columns_ = 0;
  int stall_limit_ = 0;
  int iterations_ = 0;
  std::vector<ColumnKind> kinds_;
  std::vector<std::vector<double>> rows_;
  std::vector<int> basis_;
  std::vector<double> cost_;
  std::vector<double> reduced_;
};

}  // namespace

SimplexSolution Solve(const LinearProgram& lp, const SimplexOptions& options) {
  lp.Validate();
  Tableau tableau(lp, options);
  SimplexSolution solution;

  if (tableau.has_artificials()) {
    // Phase 1 is bounded above by 0, so it never reports unbounded.
    tableau.Optimize(tableau.ArtificialCost(), /*allow_artificial=*/true);
    if (tableau.objective_value() < -options.feasibility_tolerance) {
      solution.status = SolveStatus::kInfeasible;
      solution.iterations = tableau.iterations();
      return solution;
    }
    tableau.EvictArtificials();
  }

  const bool bounded =
      tableau.Optimize(tableau.StructuralCost(lp), /*allow_artificial=*/false);
  solution.iterations = tableau.iterations();
  if (!bounded) {
    solution.status = SolveStatus::kUnbounded;
    return solution;
  }
  solution.status = SolveStatus::kOptimal;
  solution.x = tableau.StructuralValues();
  solution.objective_value = EvaluateObjective(lp, solution.x);
  return solution;
}

}  // namespace fuzzytp
