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

// The classical balanced transportation problem
//
//   min sum_ij C_ij x_ij  s.t.  sum_j x_ij = a_i,  sum_i x_ij = b_j,  x >= 0
//
// with the North-West Corner and Vogel starting rules and the MODI
// (u-v potentials) method. Everything here is independent of the general
// simplex so the two can check each other.

#ifndef FUZZYTP_TRANSPORT_H_
#define FUZZYTP_TRANSPORT_H_

#include <compare>
#include <span>
#include <vector>

#include "fuzzytp/grid.h"
#include "fuzzytp/simplex.h"

namespace fuzzytp {

// Zero-based (row, column) coordinate in a transportation table.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct TransportInstance {
  std::vector<double> supplies;  // a_i >= 0
  std::vector<double> demands;   // b_j >= 0
  Grid<double> costs;            // per-unit cost (or profit) C_ij

  int num_sources() const { return static_cast<int>(supplies.size()); }
  int num_destinations() const { return static_cast<int>(demands.size()); }

  // Throws std::invalid_argument on empty/negative/non-finite data or
  // mismatched cost dimensions.
  void Validate() const;
};

struct TransportPlan {
  Grid<double> shipments;
  // Basic cells; always contains every cell with a positive shipment.
  std::vector<Cell> basis;
};

enum class TransportObjective { kMinimize, kMaximize };

// True iff sum(a) == sum(b) within 1e-9 relative tolerance.
bool CheckBalance(const TransportInstance& instance);

// Both starting rules require a balanced instance (std::invalid_argument
// otherwise) and return a loop-free basis of exactly M + N - 1 cells,
// zero-valued basic cells included where the allocation is degenerate.
TransportPlan NorthWestCorner(const TransportInstance& instance);
// Minimizes; pass a negated instance to start a maximization.
TransportPlan VogelApproximation(const TransportInstance& instance);

// Ordered-cycle test: at least 4 distinct cells, cyclically consecutive
// cells share a row or a column, and no three consecutive cells share one.
bool DetectLoop(std::span<const Cell> cells);

// True iff some subset of `cells` forms a loop (the rows/columns graph
// has a cycle).
bool ContainsLoop(std::span<const Cell> cells, int rows, int cols);

struct Potentials {
  std::vector<double> u;  // per row
  std::vector<double> v;  // per column
};

// Solves u_i + v_j = costs(i, j) over a spanning-tree basis of
// M + N - 1 cells, anchored at u_0 = 0.
Potentials ComputePotentials(const Grid<double>& costs,
                             std::span<const Cell> basis);

// Runs the MODI method from a basic feasible start. Bases with fewer than
// M + N - 1 cells are completed with zero-shipment cells, taking the
// lexicographically smallest cells that keep the basis loop-free. At exit
// every nonbasic reduced cost C_ij - u_i - v_j is >= 0 (minimize) or
// <= 0 (maximize). Throws std::invalid_argument if the start basis contains
// a loop or the start plan is infeasible.
TransportPlan ModiOptimize(const TransportInstance& instance,
                           TransportPlan start, TransportObjective sense);

double PlanValue(const TransportInstance& instance, const TransportPlan& plan);

// Same costs with every entry negated.
TransportInstance Negated(const TransportInstance& instance);

// The equality-constrained LP form of the instance (variable i * N + j).
LinearProgram ToLinearProgram(const TransportInstance& instance,
                              TransportObjective sense);

}  // namespace fuzzytp

#endif  // FUZZYTP_TRANSPORT_H_
