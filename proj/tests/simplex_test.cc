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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "fuzzytp/distribution_model.h"
#include "oracles.h"

namespace fuzzytp {
namespace {

TEST(SimplexTest, BoxCorner) {
  LinearProgram lp{Sense::kMaximize, {1, 1}, {}};
  lp.AddConstraint({1, 0}, Relation::kLessEqual, 1);
  lp.AddConstraint({0, 1}, Relation::kLessEqual, 1);
  const SimplexSolution s = Solve(lp);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 2.0, 1e-12);
  EXPECT_NEAR(s.x[0], 1.0, 1e-12);
  EXPECT_NEAR(s.x[1], 1.0, 1e-12);
}

TEST(SimplexTest, Infeasible) {
  LinearProgram lp{Sense::kMaximize, {1}, {}};
  lp.AddConstraint({1}, Relation::kLessEqual, -1);
  EXPECT_EQ(Solve(lp).status, SolveStatus::kInfeasible);
}

TEST(SimplexTest, Unbounded) {
  LinearProgram lp{Sense::kMaximize, {1, 1}, {}};
  lp.AddConstraint({1, -1}, Relation::kLessEqual, 1);
  EXPECT_EQ(Solve(lp).status, SolveStatus::kUnbounded);
  lp.sense = Sense::kMinimize;
  const SimplexSolution s = Solve(lp);
  EXPECT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 0.0, 1e-12);
}

TEST(SimplexTest, MixedRelations) {
  // min 2x + 3y  s.t. x + y >= 4, x - y = 1, x <= 10.
  LinearProgram lp{Sense::kMinimize, {2, 3}, {}};
  lp.AddConstraint({1, 1}, Relation::kGreaterEqual, 4);
  lp.AddConstraint({1, -1}, Relation::kEqual, 1);
  lp.AddConstraint({1, 0}, Relation::kLessEqual, 10);
  const SimplexSolution s = Solve(lp);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 2.5, 1e-9);
  EXPECT_NEAR(s.x[1], 1.5, 1e-9);
  EXPECT_NEAR(s.objective_value, 9.5, 1e-9);
}

TEST(SimplexTest, RedundantEqualities) {
  LinearProgram lp{Sense::kMaximize, {1, 2}, {}};
  lp.AddConstraint({1, 1}, Relation::kEqual, 3);
  lp.AddConstraint({2, 2}, Relation::kEqual, 6);
  const SimplexSolution s = Solve(lp);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 6.0, 1e-9);
}

TEST(SimplexTest, ValidatesInput) {
  LinearProgram lp{Sense::kMaximize, {1, 2}, {}};
  lp.AddConstraint({1}, Relation::kLessEqual, 3);
  EXPECT_THROW(Solve(lp), std::invalid_argument);
}

TEST(SimplexTest, BenchmarkDistributorLp) {
  const SimplexSolution s = Solve(ToLinearProgram(testing::BenchmarkMeans()));
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, testing::kBenchmarkOptimum, 1e-6);
}

TEST(SimplexTest, DegenerateCyclingExample) {
  // Beale's example cycles under textbook Dantzig pricing without an
  // anti-cycling rule.
  LinearProgram lp{Sense::kMinimize, {-0.75, 150, -0.02, 6}, {}};
  lp.AddConstraint({0.25, -60, -0.04, 9}, Relation::kLessEqual, 0);
  lp.AddConstraint({0.5, -90, -0.02, 3}, Relation::kLessEqual, 0);
  lp.AddConstraint({0, 0, 1, 0}, Relation::kLessEqual, 1);
  const SimplexSolution s = Solve(lp);
  ASSERT_EQ(s.status, SolveStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, -0.05, 1e-9);
}

TEST(SimplexTest, IterationLimit) {
  LinearProgram lp{Sense::kMaximize, {1, 1}, {}};
  lp.AddConstraint({1, 0}, Relation::kLessEqual, 1);
  lp.AddConstraint({0, 1}, Relation::kLessEqual, 1);
  SimplexOptions options;
  options.max_iterations = 1;
  EXPECT_THROW(Solve(lp, options), std::runtime_error);
}

TEST(SimplexTest, MatchesVertexEnumeration) {
  std::mt19937_64 rng(2024);
  int counts[3] = {0, 0, 0};
  for (int k = 0; k < 1000; ++k) {
    const LinearProgram lp = testing::RandomSmallLp(rng);
    const testing::OracleResult oracle = testing::VertexEnumeration(lp);
    const SimplexSolution s = Solve(lp);
    ASSERT_EQ(s.status, oracle.status) << "case " << k;
    ++counts[static_cast<int>(s.status)];
    if (s.status == SolveStatus::kOptimal) {
      EXPECT_NEAR(s.objective_value, oracle.value, 1e-6) << "case " << k;
      EXPECT_LE(MaxConstraintViolation(lp, s.x), 1e-7) << "case " << k;
      EXPECT_NEAR(EvaluateObjective(lp, s.x), s.objective_value, 1e-9);
    }
  }
  // Every status should be exercised by the generator.
  EXPECT_GT(counts[0], 50);
  EXPECT_GT(counts[1], 50);
  EXPECT_GT(counts[2], 50);
}

TEST(SimplexTest, StatusNames) {
  EXPECT_EQ(ToString(SolveStatus::kOptimal), "optimal");
  EXPECT_EQ(ToString(SolveStatus::kInfeasible), "infeasible");
  EXPECT_EQ(ToString(SolveStatus::kUnbounded), "unbounded");
}

}  // namespace
}  // namespace fuzzytp
