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

// Distributor purchase/resale model. A distributor buys from M wholesalers
// and sells to N consumers; shipping x_ij units from wholesaler i to
// consumer j earns the unit profit
//
//   z_ij = r_j - k_i - c_ij
//
// (reduced sale price minus reduced purchase price minus transport cost).
// The plan maximizes D = sum_ij z_ij x_ij subject to
//
//   sum_j x_ij <= a_i   (wholesaler capacity)
//   sum_i x_ij <= b_j   (consumer requirement)
//   sum_j x_ij >= p_i   (contracted minimum purchase)
//   sum_i x_ij >= q_j   (contracted minimum sale)
//   x_ij >= 0.

#ifndef FUZZYTP_DISTRIBUTION_MODEL_H_
#define FUZZYTP_DISTRIBUTION_MODEL_H_

#include <optional>
#include <string>
#include <vector>

#include "fuzzytp/fuzzy_number.h"
#include "fuzzytp/grid.h"
#include "fuzzytp/simplex.h"

namespace fuzzytp {

using Fuzzy = TrapezoidalFuzzyNumber;

struct DistributionProblem {
  std::vector<Fuzzy> supply_max;              // a_i
  std::vector<Fuzzy> demand_max;              // b_j
  std::vector<Fuzzy> purchase_min;            // p_i
  std::vector<Fuzzy> sale_min;                // q_j
  std::vector<Fuzzy> purchase_price_reduced;  // k_i
  std::vector<Fuzzy> sale_price_reduced;      // r_j
  Grid<Fuzzy> transport_cost;                 // c_ij
  // Contract base prices t_i, s_j. Carried as metadata only; the
  // objective is built from the reduced prices.
  std::optional<std::vector<Fuzzy>> purchase_price_contract;
  std::optional<std::vector<Fuzzy>> sale_price_contract;

  int num_wholesalers() const { return static_cast<int>(supply_max.size()); }
  int num_consumers() const { return static_cast<int>(demand_max.size()); }

  // Throws std::invalid_argument if any per-index vector or the cost grid
  // disagrees with M = |supply_max|, N = |demand_max|, or M, N < 1.
  void Validate() const;

  friend bool operator==(const DistributionProblem&,
                         const DistributionProblem&) = default;
};

// Column label of shipment x_ij (zero-based i, j): "x_12" style while both
// one-based indices are single digits, "x_1_12" style otherwise.
std::string ShipmentLabel(int i, int j);

// Real-valued scenario of the model. Prices enter only through the profit
// matrix z, which is what every LP built from a scenario needs.
struct CrispInstance {
  std::vector<double> supply_max;
  std::vector<double> demand_max;
  std::vector<double> purchase_min;
  std::vector<double> sale_min;
  Grid<double> profit;

  int num_wholesalers() const { return static_cast<int>(supply_max.size()); }
  int num_consumers() const { return static_cast<int>(demand_max.size()); }
  void Validate() const;

  friend bool operator==(const CrispInstance&, const CrispInstance&) = default;
};

// z_ij = (r_j - k_i) - c_ij, exact in trapezoid arithmetic.
Grid<Fuzzy> ProfitCoefficients(const DistributionProblem& problem);

// Profit from crisp prices.
Grid<double> ProfitCoefficients(const std::vector<double>& purchase_price_reduced,
                                const std::vector<double>& sale_price_reduced,
                                const Grid<double>& transport_cost);

// Scenario at the core midpoint of every parameter (the means, for
// parameters built from symmetric distributions).
CrispInstance CoreMidpointInstance(const DistributionProblem& problem);

// Variable x_ij has index i * N + j. Constraint order: the M capacity rows,
// the N requirement rows, the M purchase-minimum rows, then the N
// sale-minimum rows.
LinearProgram ToLinearProgram(const CrispInstance& instance);

struct PrecheckViolation {
  enum class Kind {
    kPurchaseExceedsSupply,   // p_i > a_i
    kSaleExceedsDemand,       // q_j > b_j
    kSalesExceedTotalSupply,  // sum q > sum a
    kPurchasesExceedTotalDemand,  // sum p > sum b
  };
  Kind kind;
  int index = -1;  // offending row/column, -1 for aggregate conditions
  double required = 0.0;
  double available = 0.0;

  std::string Describe() const;
};

struct PrecheckReport {
  std::vector<PrecheckViolation> violations;
  bool passed() const { return violations.empty(); }
};

// Necessary (not sufficient) feasibility conditions; the phase-1 LP is the
// full test.
PrecheckReport FeasibilityPrecheck(const CrispInstance& instance);

}  // namespace fuzzytp

#endif  // FUZZYTP_DISTRIBUTION_MODEL_H_
