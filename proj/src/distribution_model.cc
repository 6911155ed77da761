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

#include "fuzzytp/distribution_model.h"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fuzzytp {

namespace {

template <typename T>
void RequireLength(const std::vector<T>& v, int expected, const char* name) {
  if (static_cast<int>(v.size()) != expected) {
    std::ostringstream msg;
    msg << name << " has " << v.size() << " entries, expected " << expected;
    throw std::invalid_argument(msg.str());
  }
}

double Sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

std::string ShipmentLabel(int i, int j) {
  const std::string row = std::to_string(i + 1);
  const std::string col = std::to_string(j + 1);
  if (i < 9 && j < 9) return "x_" + row + col;
  return "x_" + row + "_" + col;
}

void DistributionProblem::Validate() const {
  const int m = num_wholesalers();
  const int n = num_consumers();
  if (m < 1 || n < 1) {
    throw std::invalid_argument("distribution problem needs M, N >= 1");
  }
  RequireLength(purchase_min, m, "purchase_min");
  RequireLength(purchase_price_reduced, m, "purchase_price_reduced");
  RequireLength(sale_min, n, "sale_min");
  RequireLength(sale_price_reduced, n, "sale_price_reduced");
  if (purchase_price_contract) {
    RequireLength(*purchase_price_contract, m, "purchase_price_contract");
  }
  if (sale_price_contract) {
    RequireLength(*sale_price_contract, n, "sale_price_contract");
  }
  if (transport_cost.rows() != m || transport_cost.cols() != n) {
    throw std::invalid_argument("transport_cost must be M x N");
  }
}

void CrispInstance::Validate() const {
  const int m = num_wholesalers();
  const int n = num_consumers();
  if (m < 1 || n < 1) {
    throw std::invalid_argument("crisp instance needs M, N >= 1");
  }
  RequireLength(purchase_min, m, "purchase_min");
  RequireLength(sale_min, n, "sale_min");
  if (profit.rows() != m || profit.cols() != n) {
    throw std::invalid_argument("profit matrix must be M x N");
  }
}

Grid<Fuzzy> ProfitCoefficients(const DistributionProblem& problem) {
  problem.Validate();
  const int m = problem.num_wholesalers();
  const int n = problem.num_consumers();
  Grid<Fuzzy> z(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      z(i, j) = problem.sale_price_reduced[j] -
                problem.purchase_price_reduced[i] - problem.transport_cost(i, j);
    }
  }
  return z;
}

Grid<double> ProfitCoefficients(const std::vector<double>& purchase_price_reduced,
                                const std::vector<double>& sale_price_reduced,
                                const Grid<double>& transport_cost) {
  const int m = static_cast<int>(purchase_price_reduced.size());
  const int n = static_cast<int>(sale_price_reduced.size());
  if (transport_cost.rows() != m || transport_cost.cols() != n) {
    throw std::invalid_argument("transport_cost must be M x N");
  }
  Grid<double> z(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      z(i, j) = sale_price_reduced[j] - purchase_price_reduced[i] -
                transport_cost(i, j);
    }
  }
  return z;
}

CrispInstance CoreMidpointInstance(const DistributionProblem& problem) {
  problem.Validate();
  auto mid = [](const std::vector<Fuzzy>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const Fuzzy& f : v) out.push_back(f.core().midpoint());
    return out;
  };
  CrispInstance inst;
  inst.supply_max = mid(problem.supply_max);
  inst.demand_max = mid(problem.demand_max);
  inst.purchase_min = mid(problem.purchase_min);
  inst.sale_min = mid(problem.sale_min);
  Grid<double> cost(problem.num_wholesalers(), problem.num_consumers());
  for (std::size_t k = 0; k < cost.size(); ++k) {
    cost.values()[k] = problem.transport_cost.values()[k].core().midpoint();
  }
  inst.profit = ProfitCoefficients(mid(problem.purchase_price_reduced),
                                   mid(problem.sale_price_reduced), cost);
  return inst;
}

LinearProgram ToLinearProgram(const CrispInstance& instance) {
  instance.Validate();
  const int m = instance.num_wholesalers();
  const int n = instance.num_consumers();
  const std::size_t vars = static_cast<std::size_t>(m) * n;
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.objective = instance.profit.values();

  auto row_of = [&](int i) {
    std::vector<double> r(vars, 0.0);
    for (int j = 0; j < n; ++j) r[i * n + j] = 1.0;
    return r;
  };
  auto col_of = [&](int j) {
    std::vector<double> c(vars, 0.0);
    for (int i = 0; i < m; ++i) c[i * n + j] = 1.0;
    return c;
  };
  for (int i = 0; i < m; ++i) {
    lp.AddConstraint(row_of(i), Relation::kLessEqual, instance.supply_max[i]);
  }
  for (int j = 0; j < n; ++j) {
    lp.AddConstraint(col_of(j), Relation::kLessEqual, instance.demand_max[j]);
  }
  for (int i = 0; i < m; ++i) {
    lp.AddConstraint(row_of(i), Relation::kGreaterEqual,
                     instance.purchase_min[i]);
  }
  for (int j = 0; j < n; ++j) {
    lp.AddConstraint(col_of(j), Relation::kGreaterEqual, instance.sale_min[j]);
  }
  return lp;
}

std::string PrecheckViolation::Describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kPurchaseExceedsSupply:
      out << "purchase minimum p[" << index << "]=" << required
          << " exceeds supply a[" << index << "]=" << available;
      break;
    case Kind::kSaleExceedsDemand:
      out << "sale minimum q[" << index << "]=" << required
          << " exceeds demand b[" << index << "]=" << available;
      break;
    case Kind::kSalesExceedTotalSupply:
      out << "total sale minimum " << required << " exceeds total supply "
          << available;
      break;
    case Kind::kPurchasesExceedTotalDemand:
      out << "total purchase minimum " << required
          << " exceeds total demand " << available;
      break;
  }
  return out.str();
}

PrecheckReport FeasibilityPrecheck(const CrispInstance& instance) {
  instance.Validate();
  using Kind = PrecheckViolation::Kind;
  PrecheckReport report;
  for (int i = 0; i < instance.num_wholesalers(); ++i) {
    if (instance.purchase_min[i] > instance.supply_max[i]) {
      report.violations.push_back({Kind::kPurchaseExceedsSupply, i,
                                   instance.purchase_min[i],
                                   instance.supply_max[i]});
    }
  }
  for (int j = 0; j < instance.num_consumers(); ++j) {
    if (instance.sale_min[j] > instance.demand_max[j]) {
      report.violations.push_back({Kind::kSaleExceedsDemand, j,
                                   instance.sale_min[j],
                                   instance.demand_max[j]});
    }
  }
  const double total_a = Sum(instance.supply_max);
  const double total_b = Sum(instance.demand_max);
  const double total_p = Sum(instance.purchase_min);
  const double total_q = Sum(instance.sale_min);
  if (total_q > total_a) {
    report.violations.push_back(
        {Kind::kSalesExceedTotalSupply, -1, total_q, total_a});
  }
  if (total_p > total_b) {
    report.violations.push_back(
        {Kind::kPurchasesExceedTotalDemand, -1, total_p, total_b});
  }
  return report;
}

}  // namespace fuzzytp
