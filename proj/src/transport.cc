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

#include "fuzzytp/transport.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace fuzzytp {

namespace {

// Rows are nodes 0..M-1, columns are nodes M..M+N-1.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False if x and y were already connected.
  bool Union(int x, int y) {
    x = Find(x);
    y = Find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

double Total(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

double QuantityTolerance(const TransportInstance& instance) {
  return 1e-9 * std::max(1.0, Total(instance.supplies));
}

void RequireBalanced(const TransportInstance& instance) {
  instance.Validate();
  if (!CheckBalance(instance)) {
    throw std::invalid_argument(
        "transportation instance is unbalanced (sum of supplies != sum of "
        "demands)");
  }
}

// Basic cells on the unique basis-tree path from row `from_row` to column
// `to_col`, in path order starting at the row end.
std::vector<Cell> TreePath(std::span<const Cell> basis, int rows, int cols,
                           int from_row, int to_col) {
  const int nodes = rows + cols;
  std::vector<std::vector<int>> adjacency(nodes);  // basis indices
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    adjacency[basis[k].row].push_back(k);
    adjacency[rows + basis[k].col].push_back(k);
  }
  std::vector<int> via(nodes, -1);
  std::vector<bool> seen(nodes, false);
  std::queue<int> frontier;
  frontier.push(from_row);
  seen[from_row] = true;
  const int target = rows + to_col;
  while (!frontier.empty() && !seen[target]) {
    const int node = frontier.front();
    frontier.pop();
    for (int k : adjacency[node]) {
      const Cell& c = basis[k];
      const int other = node < rows ? rows + c.col : c.row;
      if (seen[other]) continue;
      seen[other] = true;
      via[other] = k;
      frontier.push(other);
    }
  }
  if (!seen[target]) {
    throw std::logic_error("transportation basis is not a spanning tree");
  }
  std::vector<Cell> path;
  for (int node = target; node != from_row;) {
    const Cell& c = basis[via[node]];
    path.push_back(c);
    node = node < rows ? rows + c.col : c.row;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

void TransportInstance::Validate() const {
  if (supplies.empty() || demands.empty()) {
    throw std::invalid_argument("transportation instance needs M, N >= 1");
  }
  for (double a : supplies) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("supplies must be finite and >= 0");
    }
  }
  for (double b : demands) {
    if (!(b >= 0.0) || !std::isfinite(b)) {
      throw std::invalid_argument("demands must be finite and >= 0");
    }
  }
  if (costs.rows() != num_sources() || costs.cols() != num_destinations()) {
    throw std::invalid_argument("cost matrix must be M x N");
  }
  for (double c : costs.values()) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite cost");
  }
}

bool CheckBalance(const TransportInstance& instance) {
  const double supply = Total(instance.supplies);
  const double demand = Total(instance.demands);
  return std::abs(supply - demand) <=
         1e-9 * std::max({1.0, std::abs(supply), std::abs(demand)});
}

TransportPlan NorthWestCorner(const TransportInstance& instance) {
  RequireBalanced(instance);
  const int m = instance.num_sources();
  const int n = instance.num_destinations();
  const double tol = QuantityTolerance(instance);
  std::vector<double> supply = instance.supplies;
  std::vector<double> demand = instance.demands;
  TransportPlan plan{Grid<double>(m, n, 0.0), {}};
  int i = 0;
  int j = 0;
  while (i < m && j < n) {
    const double q = std::min(supply[i], demand[j]);
    plan.shipments(i, j) = q;
    plan.basis.push_back({i, j});
    supply[i] -= q;
    demand[j] -= q;
    // On a tie the rule moves right and leaves a zero basic cell below.
    if (j == n - 1) {
      ++i;
    } else if (i == m - 1 || demand[j] <= tol) {
      ++j;
    } else {
      ++i;
    }
  }
  return plan;
}

TransportPlan VogelApproximation(const TransportInstance& instance) {
  RequireBalanced(instance);
  const int m = instance.num_sources();
  const int n = instance.num_destinations();
  const double tol = QuantityTolerance(instance);
  const Grid<double>& cost = instance.costs;
  std::vector<double> supply = instance.supplies;
  std::vector<double> demand = instance.demands;
  std::vector<bool> row_open(m, true);
  std::vector<bool> col_open(n, true);
  int rows_left = m;
  int cols_left = n;
  TransportPlan plan{Grid<double>(m, n, 0.0), {}};

  // Difference between the two cheapest open entries of a line; a line
  // with a single open entry is penalized by that entry.
  auto penalty = [](double first, double second, int count) {
    return count >= 2 ? second - first : first;
  };

  while (rows_left > 0 && cols_left > 0) {
    double best_penalty = -std::numeric_limits<double>::infinity();
    bool best_is_row = true;
    int best_line = -1;
    for (int i = 0; i < m; ++i) {
      if (!row_open[i]) continue;
      double first = std::numeric_limits<double>::infinity(), second = first;
      int count = 0;
      for (int j = 0; j < n; ++j) {
        if (!col_open[j]) continue;
        ++count;
        const double c = cost(i, j);
        if (c < first) {
          second = first;
          first = c;
        } else if (c < second) {
          second = c;
        }
      }
      const double p = penalty(first, second, count);
      if (p > best_penalty) {
        best_penalty = p;
        best_is_row = true;
        best_line = i;
      }
    }
    for (int j = 0; j < n; ++j) {
      if (!col_open[j]) continue;
      double first = std::numeric_limits<double>::infinity(), second = first;
      int count = 0;
      for (int i = 0; i < m; ++i) {
        if (!row_open[i]) continue;
        ++count;
        const double c = cost(i, j);
        if (c < first) {
          second = first;
          first = c;
        } else if (c < second) {
          second = c;
        }
      }
      const double p = penalty(first, second, count);
      if (p > best_penalty) {
        best_penalty = p;
        best_is_row = false;
        best_line = j;
      }
    }

    int i = -1;
    int j = -1;
    if (best_is_row) {
      i = best_line;
      for (int c = 0; c < n; ++c) {
        if (col_open[c] && (j < 0 || cost(i, c) < cost(i, j))) j = c;
      }
    } else {
      j = best_line;
      for (int r = 0; r < m; ++r) {
        if (row_open[r] && (i < 0 || cost(r, j) < cost(i, j))) i = r;
      }
    }

    const double q = std::min(supply[i], demand[j]);
    plan.shipments(i, j) = q;
    plan.basis.push_back({i, j});
    supply[i] -= q;
    demand[j] -= q;
    // Close exactly one line per step, except on the very last cell, so the
    // basis ends with M + N - 1 cells.
    if (rows_left == 1 && cols_left == 1) {
      row_open[i] = false;
      col_open[j] = false;
      --rows_left;
      --cols_left;
    } else if (supply[i] <= tol && rows_left > 1) {
      row_open[i] = false;
      --rows_left;
    } else {
      col_open[j] = false;
      --cols_left;
    }
  }
  return plan;
}

bool DetectLoop(std::span<const Cell> cells) {
  const std::size_t n = cells.size();
  if (n < 4) return false;
  std::set<Cell> distinct(cells.begin(), cells.end());
  if (distinct.size() != n) return false;
  // Distinct cells can share a row or a column but not both, so each
  // consecutive pair links through exactly one of them; the links must
  // alternate all the way round.
  std::vector<int> link(n);  // 0 = same row, 1 = same column
  for (std::size_t k = 0; k < n; ++k) {
    const Cell& a = cells[k];
    const Cell& b = cells[(k + 1) % n];
    if (a.row == b.row) {
      link[k] = 0;
    } else if (a.col == b.col) {
      link[k] = 1;
    } else {
      return false;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (link[k] == link[(k + 1) % n]) return false;
  }
  return true;
}

bool ContainsLoop(std::span<const Cell> cells, int rows, int cols) {
  DisjointSets sets(rows + cols);
  for (const Cell& c : cells) {
    if (!sets.Union(c.row, rows + c.col)) return true;
  }
  return false;
}

Potentials ComputePotentials(const Grid<double>& costs,
                             std::span<const Cell> basis) {
  const int rows = costs.rows();
  const int cols = costs.cols();
  if (static_cast<int>(basis.size()) != rows + cols - 1 ||
      ContainsLoop(basis, rows, cols)) {
    throw std::invalid_argument(
        "potentials need a loop-free basis of M + N - 1 cells");
  }
  std::vector<std::vector<Cell>> by_row(rows), by_col(cols);
  for (const Cell& c : basis) {
    by_row[c.row].push_back(c);
    by_col[c.col].push_back(c);
  }
  Potentials p{std::vector<double>(rows, 0.0), std::vector<double>(cols, 0.0)};
  std::vector<bool> row_done(rows, false), col_done(cols, false);
  std::queue<int> frontier;  // node ids as in DisjointSets
  row_done[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    const int node = frontier.front();
    frontier.pop();
    if (node < rows) {
      for (const Cell& c : by_row[node]) {
        if (col_done[c.col]) continue;
        p.v[c.col] = costs(c.row, c.col) - p.u[c.row];
        col_done[c.col] = true;
        frontier.push(rows + c.col);
      }
    } else {
      for (const Cell& c : by_col[node - rows]) {
        if (row_done[c.row]) continue;
        p.u[c.row] = costs(c.row, c.col) - p.v[c.col];
        row_done[c.row] = true;
        frontier.push(c.row);
      }
    }
  }
  return p;
}

TransportPlan ModiOptimize(const TransportInstance& instance,
                           TransportPlan start, TransportObjective sense) {
  RequireBalanced(instance);
  const int m = instance.num_sources();
  const int n = instance.num_destinations();
  const double qtol = QuantityTolerance(instance);
  if (start.shipments.rows() != m || start.shipments.cols() != n) {
    throw std::invalid_argument("start plan dimensions do not match instance");
  }
  for (int i = 0; i < m; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (start.shipments(i, j) < -qtol) {
        throw std::invalid_argument("start plan has a negative shipment");
      }
      row_sum += start.shipments(i, j);
    }
    if (std::abs(row_sum - instance.supplies[i]) > 1e-7 * std::max(1.0, row_sum)) {
      throw std::invalid_argument("start plan row " + std::to_string(i) +
                                  " does not ship its supply");
    }
  }
  for (int j = 0; j < n; ++j) {
    double col_sum = 0.0;
    for (int i = 0; i < m; ++i) col_sum += start.shipments(i, j);
    if (std::abs(col_sum - instance.demands[j]) > 1e-7 * std::max(1.0, col_sum)) {
      throw std::invalid_argument("start plan column " + std::to_string(j) +
                                  " does not meet its demand");
    }
  }

  std::set<Cell> in_basis;
  for (const Cell& c : start.basis) {
    if (c.row < 0 || c.row >= m || c.col < 0 || c.col >= n ||
        !in_basis.insert(c).second) {
      throw std::invalid_argument("start basis has an invalid or repeated cell");
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (start.shipments(i, j) > qtol && !in_basis.count({i, j})) {
        throw std::invalid_argument("start basis omits a positive shipment");
      }
    }
  }
  if (ContainsLoop(start.basis, m, n)) {
    throw std::invalid_argument("start basis contains a loop (not basic)");
  }

  std::vector<Cell> basis = start.basis;
  {
    DisjointSets sets(m + n);
    for (const Cell& c : basis) sets.Union(c.row, m + c.col);
    for (int i = 0; i < m && static_cast<int>(basis.size()) < m + n - 1; ++i) {
      for (int j = 0; j < n && static_cast<int>(basis.size()) < m + n - 1; ++j) {
        if (in_basis.count({i, j})) continue;
        if (sets.Union(i, m + j)) {
          basis.push_back({i, j});
          in_basis.insert({i, j});
        }
      }
    }
  }

  Grid<double> cost = instance.costs;
  if (sense == TransportObjective::kMaximize) {
    for (double& c : cost.values()) c = -c;
  }
  double scale = 1.0;
  for (double c : cost.values()) scale = std::max(scale, std::abs(c));
  const double rtol = 1e-9 * scale;

  Grid<double> x = std::move(start.shipments);
  const int max_pivots = 1000 * (m * n + 1);
  int stalled = 0;
  for (int pivots = 0;; ++pivots) {
    if (pivots > max_pivots) {
      throw std::runtime_error("MODI pivot limit exceeded");
    }
    const Potentials p = ComputePotentials(cost, basis);
    // After a run of degenerate pivots take the first improving cell
    // instead of the steepest one.
    const bool first_improving = stalled > m + n;
    Cell entering{-1, -1};
    double best = -rtol;
    for (int i = 0; i < m && !(first_improving && entering.row >= 0); ++i) {
      for (int j = 0; j < n; ++j) {
        if (in_basis.count({i, j})) continue;
        const double reduced = cost(i, j) - p.u[i] - p.v[j];
        if (reduced < best) {
          best = reduced;
          entering = {i, j};
          if (first_improving) break;
        }
      }
    }
    if (entering.row < 0) break;

    const std::vector<Cell> path = TreePath(basis, m, n, entering.row, entering.col);
    // Along the path from the entering row the signs run -, +, -, ...
    double theta = std::numeric_limits<double>::infinity();
    Cell leaving{-1, -1};
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const double q = x(path[k].row, path[k].col);
      if (q < theta || (q == theta && path[k] < leaving)) {
        theta = q;
        leaving = path[k];
      }
    }
    theta = std::max(0.0, theta);
    stalled = theta <= qtol ? stalled + 1 : 0;
    x(entering.row, entering.col) = theta;
    for (std::size_t k = 0; k < path.size(); ++k) {
      double& q = x(path[k].row, path[k].col);
      q += (k % 2 == 0) ? -theta : theta;
    }
    x(leaving.row, leaving.col) = 0.0;
    *std::find(basis.begin(), basis.end(), leaving) = entering;
    in_basis.erase(leaving);
    in_basis.insert(entering);
  }

  for (double& q : x.values()) {
    if (q < 0.0 && q > -qtol) q = 0.0;
  }
  std::sort(basis.begin(), basis.end());
  return TransportPlan{std::move(x), std::move(basis)};
}

double PlanValue(const TransportInstance& instance, const TransportPlan& plan) {
  double total = 0.0;
  for (std::size_t k = 0; k < plan.shipments.size(); ++k) {
    total += instance.costs.values()[k] * plan.shipments.values()[k];
  }
  return total;
}

TransportInstance Negated(const TransportInstance& instance) {
  TransportInstance out = instance;
  for (double& c : out.costs.values()) c = -c;
  return out;
}

LinearProgram ToLinearProgram(const TransportInstance& instance,
                              TransportObjective sense) {
  instance.Validate();
  const int m = instance.num_sources();
  const int n = instance.num_destinations();
  LinearProgram lp;
  lp.sense = sense == TransportObjective::kMaximize ? Sense::kMaximize
                                                    : Sense::kMinimize;
  lp.objective = instance.costs.values();
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(static_cast<std::size_t>(m) * n, 0.0);
    for (int j = 0; j < n; ++j) row[i * n + j] = 1.0;
    lp.AddConstraint(std::move(row), Relation::kEqual, instance.supplies[i]);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> col(static_cast<std::size_t>(m) * n, 0.0);
    for (int i = 0; i < m; ++i) col[i * n + j] = 1.0;
    lp.AddConstraint(std::move(col), Relation::kEqual, instance.demands[j]);
  }
  return lp;
}

}  // namespace fuzzytp
