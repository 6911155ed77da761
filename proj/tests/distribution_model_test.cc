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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "fuzzytp/monte_carlo.h"
#include "fuzzytp/simplex.h"
#include "fuzzytp/transport.h"
#include "oracles.h"

namespace fuzzytp {
namespace {

CrispInstance OneByOne(double profit) {
  CrispInstance c{{10}, {10}, {5}, {5}, Grid<double>(1, 1, profit)};
  return c;
}

TEST(ProfitTest, CrispBenchmark) {
  const GaussianModel model = testing::BenchmarkModel(0.0);
  std::vector<double> k, r;
  for (const auto& s : model.purchase_price_reduced) k.push_back(s.mean);
  for (const auto& s : model.sale_price_reduced) r.push_back(s.mean);
  Grid<double> c(3, 3);
  for (int e = 0; e < 9; ++e) c.values()[e] = model.transport_cost.values()[e].mean;
  EXPECT_EQ(ProfitCoefficients(k, r, c), testing::BenchmarkMeans().profit);
}

TEST(ProfitTest, FuzzyMatchesCrispAndCommutesWithCuts) {
  const DistributionProblem p = testing::BenchmarkModel(10.0).ToFuzzy();
  const Grid<Fuzzy> z = ProfitCoefficients(p);
  EXPECT_DOUBLE_EQ(z(0, 0).b() + z(0, 0).c(), 2 * 300.0);
  for (double alpha : AlphaGrid::Uniform().levels()) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const Interval expected = p.sale_price_reduced[j].AlphaCut(alpha) -
                                  p.purchase_price_reduced[i].AlphaCut(alpha) -
                                  p.transport_cost(i, j).AlphaCut(alpha);
        const Interval got = z(i, j).AlphaCut(alpha);
        EXPECT_NEAR(got.lo(), expected.lo(), 1e-9);
        EXPECT_NEAR(got.hi(), expected.hi(), 1e-9);
      }
    }
  }
}

TEST(ProfitTest, ZeroParameters) {
  DistributionProblem p;
  p.supply_max = p.purchase_min = p.purchase_price_reduced = {Fuzzy::Crisp(0)};
  p.demand_max = p.sale_min = p.sale_price_reduced = {Fuzzy::Crisp(0)};
  p.transport_cost = Grid<Fuzzy>(1, 1, Fuzzy::Crisp(0));
  EXPECT_EQ(ProfitCoefficients(p)(0, 0), Fuzzy::Crisp(0));
}

TEST(DistributionProblemTest, ValidateDimensions) {
  DistributionProblem p = testing::BenchmarkModel(10.0).ToFuzzy();
  EXPECT_NO_THROW(p.Validate());
  p.sale_min.pop_back();
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p = testing::BenchmarkModel(10.0).ToFuzzy();
  p.transport_cost = Grid<Fuzzy>(3, 2);
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  EXPECT_THROW(DistributionProblem{}.Validate(), std::invalid_argument);
}

TEST(ShipmentLabelTest, Format) {
  EXPECT_EQ(ShipmentLabel(0, 0), "x_11");
  EXPECT_EQ(ShipmentLabel(2, 1), "x_32");
  EXPECT_EQ(ShipmentLabel(0, 11), "x_1_12");
}

TEST(CoreMidpointTest, GaussianMeans) {
  const DistributionProblem p = testing::BenchmarkModel(10.0).ToFuzzy();
  const CrispInstance c = CoreMidpointInstance(p);
  const CrispInstance expected = testing::BenchmarkMeans();
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(c.supply_max[i], expected.supply_max[i], 1e-9);
    EXPECT_NEAR(c.purchase_min[i], expected.purchase_min[i], 1e-9);
    EXPECT_NEAR(c.demand_max[i], expected.demand_max[i], 1e-9);
    EXPECT_NEAR(c.sale_min[i], expected.sale_min[i], 1e-9);
  }
  for (int e = 0; e < 9; ++e) {
    EXPECT_NEAR(c.profit.values()[e], expected.profit.values()[e], 1e-9);
  }
}

TEST(ToLinearProgramTest, Layout) {
  const LinearProgram lp = ToLinearProgram(testing::BenchmarkMeans());
  EXPECT_EQ(lp.sense, Sense::kMaximize);
  EXPECT_EQ(lp.num_variables(), 9);
  ASSERT_EQ(lp.num_constraints(), 12);
  EXPECT_EQ(lp.constraints[0].relation, Relation::kLessEqual);
  EXPECT_EQ(lp.constraints[0].rhs, 460);
  EXPECT_EQ(lp.constraints[3].coefficients,
            (std::vector<double>{1, 0, 0, 1, 0, 0, 1, 0, 0}));
  EXPECT_EQ(lp.constraints[3].rhs, 410);
  EXPECT_EQ(lp.constraints[6].relation, Relation::kGreaterEqual);
  EXPECT_EQ(lp.constraints[6].rhs, 440);
  EXPECT_EQ(lp.constraints[11].rhs, 590);
}

TEST(ToLinearProgramTest, OneByOne) {
  SimplexSolution s = Solve(ToLinearProgram(OneByOne(7)));
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 10, 1e-9);
  EXPECT_NEAR(s.objective_value, 70, 1e-9);
  s = Solve(ToLinearProgram(OneByOne(-7)));
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 5, 1e-9);
  EXPECT_NEAR(s.objective_value, -35, 1e-9);
}

// With balanced capacities, positive profits and p <= a, q <= b, the
// distributor optimum ships everything, so it equals the transportation
// optimum on rows a and columns b.
TEST(ToLinearProgramTest, AgreesWithTransportOnBalancedPositiveProfits) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> profit(1, 60);
  std::uniform_real_distribution<double> share(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const TransportInstance t = testing::RandomBalancedTransport(rng, 4);
    CrispInstance c;
    c.supply_max = t.supplies;
    c.demand_max = t.demands;
    for (double a : t.supplies) c.purchase_min.push_back(std::floor(a * share(rng)));
    for (double b : t.demands) c.sale_min.push_back(std::floor(b * share(rng)));
    c.profit = Grid<double>(t.num_sources(), t.num_destinations());
    for (double& z : c.profit.values()) z = profit(rng);
    const SimplexSolution lp = Solve(ToLinearProgram(c));
    ASSERT_EQ(lp.status, SolveStatus::kOptimal);
    const TransportInstance induced{c.supply_max, c.demand_max, c.profit};
    const TransportPlan plan = ModiOptimize(induced, NorthWestCorner(induced),
                                            TransportObjective::kMaximize);
    EXPECT_NEAR(lp.objective_value, PlanValue(induced, plan), 1e-6) << k;
  }
}

TEST(PrecheckTest, Examples) {
  EXPECT_TRUE(FeasibilityPrecheck(testing::BenchmarkMeans()).passed());
  CrispInstance bad = testing::BenchmarkMeans();
  bad.purchase_min[0] = bad.supply_max[0] + 1;
  const PrecheckReport report = FeasibilityPrecheck(bad);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.violations[0].kind,
            PrecheckViolation::Kind::kPurchaseExceedsSupply);
  EXPECT_EQ(report.violations[0].index, 0);
  EXPECT_FALSE(report.violations[0].Describe().empty());
  EXPECT_TRUE(FeasibilityPrecheck(CrispInstance{{10}, {10}, {0}, {0}, Grid<double>(1, 1, 1.0)})
                  .passed());
}

TEST(PrecheckTest, AggregateConditions) {
  // Each p_i <= a_i and q_j <= b_j, yet the minimum sales exceed all supply.
  CrispInstance c{{5, 5}, {20}, {0, 0}, {15}, Grid<double>(2, 1, 1.0)};
  const PrecheckReport report = FeasibilityPrecheck(c);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].kind,
            PrecheckViolation::Kind::kSalesExceedTotalSupply);
  EXPECT_EQ(Solve(ToLinearProgram(c)).status, SolveStatus::kInfeasible);
}

}  // namespace
}  // namespace fuzzytp
