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

#include "fuzzytp/fuzzy_number.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace fuzzytp {
namespace {

using T = TrapezoidalFuzzyNumber;

const T kSample = T::Make(78, 95, 105, 120);

TEST(TrapezoidTest, MakeValidatesOrder) {
  EXPECT_THROW(T::Make(5, 4, 3, 2), std::invalid_argument);
  EXPECT_THROW(T::Make(0, 2, 1, 3), std::invalid_argument);
  EXPECT_NO_THROW(T::Make(1, 1, 1, 1));
  EXPECT_TRUE(T::Crisp(4).is_crisp());
  EXPECT_FALSE(kSample.is_crisp());
}

TEST(TrapezoidTest, Membership) {
  EXPECT_DOUBLE_EQ(kSample.Membership(100), 1.0);
  EXPECT_DOUBLE_EQ(kSample.Membership(86.5), 0.5);
  EXPECT_DOUBLE_EQ(kSample.Membership(70), 0.0);
  EXPECT_DOUBLE_EQ(kSample.Membership(112.5), 0.5);
  EXPECT_DOUBLE_EQ(kSample.Membership(120), 0.0);
  EXPECT_DOUBLE_EQ(kSample.Membership(125), 0.0);
  EXPECT_DOUBLE_EQ(T::Crisp(3).Membership(3), 1.0);
  EXPECT_DOUBLE_EQ(T::Make(0, 0, 1, 2).Membership(0), 1.0);
}

TEST(TrapezoidTest, AlphaCut) {
  EXPECT_EQ(kSample.AlphaCut(0.0), Interval::Make(78, 120));
  EXPECT_EQ(kSample.AlphaCut(1.0), Interval::Make(95, 105));
  EXPECT_EQ(kSample.AlphaCut(0.5), Interval::Make(86.5, 112.5));
  EXPECT_THROW(kSample.AlphaCut(-0.1), std::invalid_argument);
  EXPECT_THROW(kSample.AlphaCut(1.1), std::invalid_argument);
  EXPECT_EQ(kSample.support(), Interval::Make(78, 120));
  EXPECT_EQ(kSample.core(), Interval::Make(95, 105));
}

TEST(TrapezoidTest, Arithmetic) {
  EXPECT_EQ(T::Make(0, 1, 2, 3) + T::Crisp(1), T::Make(1, 2, 3, 4));
  EXPECT_EQ(T::Make(1, 2, 3, 4) - T::Crisp(1), T::Make(0, 1, 2, 3));
  EXPECT_EQ(T::Crisp(990) - T::Crisp(590) - T::Crisp(100), T::Crisp(300));
  EXPECT_EQ(T::Make(0, 1, 2, 3) - T::Make(0, 1, 2, 3), T::Make(-3, -1, 1, 3));
  EXPECT_EQ(Scale(T::Make(0, 1, 2, 3), 2.0), T::Make(0, 2, 4, 6));
  EXPECT_THROW(Scale(kSample, -1.0), std::invalid_argument);
}

T RandomTrapezoid(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::array<double, 4> v{u(rng), u(rng), u(rng), u(rng)};
  std::sort(v.begin(), v.end());
  return T::Make(v[0], v[1], v[2], v[3]);
}

TEST(TrapezoidTest, CutProperties) {
  std::mt19937_64 rng(5);
  const AlphaGrid grid = AlphaGrid::Uniform();
  std::uniform_real_distribution<double> u(-25.0, 25.0), unit(0.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    const T x = RandomTrapezoid(rng);
    const T y = RandomTrapezoid(rng);
    for (int l = 0; l + 1 < grid.size(); ++l) {
      EXPECT_TRUE(x.AlphaCut(grid[l]).Contains(x.AlphaCut(grid[l + 1]), 0.0));
    }
    for (double alpha : grid.levels()) {
      const Interval sum = x.AlphaCut(alpha) + y.AlphaCut(alpha);
      const Interval diff = x.AlphaCut(alpha) - y.AlphaCut(alpha);
      EXPECT_NEAR((x + y).AlphaCut(alpha).lo(), sum.lo(), 1e-12);
      EXPECT_NEAR((x + y).AlphaCut(alpha).hi(), sum.hi(), 1e-12);
      EXPECT_NEAR((x - y).AlphaCut(alpha).lo(), diff.lo(), 1e-12);
      EXPECT_NEAR((x - y).AlphaCut(alpha).hi(), diff.hi(), 1e-12);
    }
    // membership >= alpha exactly when the point lies in the cut.
    for (int t = 0; t < 20; ++t) {
      const double point = u(rng);
      const double alpha = std::max(unit(rng), 1e-6);
      const double mu = x.Membership(point);
      const Interval cut = x.AlphaCut(alpha);
      if (mu >= alpha + 1e-9) EXPECT_TRUE(cut.Contains(point));
      if (mu <= alpha - 1e-9) EXPECT_FALSE(cut.Contains(point, 0.0));
    }
  }
}

TEST(AlphaGridTest, Construction) {
  const AlphaGrid g = AlphaGrid::Uniform();
  ASSERT_EQ(g.size(), 11);
  EXPECT_DOUBLE_EQ(g[0], 0.0);
  EXPECT_DOUBLE_EQ(g[3], 0.3);
  EXPECT_DOUBLE_EQ(g[10], 1.0);
  EXPECT_THROW(AlphaGrid::Uniform(1), std::invalid_argument);
  EXPECT_THROW(AlphaGrid::FromLevels({0.0, 0.5}), std::invalid_argument);
  EXPECT_THROW(AlphaGrid::FromLevels({0.0, 0.6, 0.5, 1.0}), std::invalid_argument);
  EXPECT_EQ(AlphaGrid::FromLevels({0.0, 0.5, 1.0}).size(), 3);
}

TEST(ProbGeqFuzzyTest, Examples) {
  const T a = T::Make(0, 1, 2, 3);
  const T b = T::Make(1, 2, 3, 4);
  const AlphaGrid three = AlphaGrid::FromLevels({0.0, 0.5, 1.0});
  EXPECT_DOUBLE_EQ(ProbGeqFuzzy(a, a, AlphaGrid::Uniform()), 0.5);
  EXPECT_DOUBLE_EQ(ProbGeqFuzzy(T::Make(10, 11, 12, 13), a, three), 1.0);
  // Per level: (2 - 2 alpha)^2 / (2 (3 - 2 alpha)^2).
  double expected = 0.0;
  for (double alpha : {0.0, 0.5, 1.0}) {
    expected += (2 - 2 * alpha) * (2 - 2 * alpha) /
                (2 * (3 - 2 * alpha) * (3 - 2 * alpha)) / 3.0;
  }
  EXPECT_NEAR(ProbGeqFuzzy(a, b, three), expected, 1e-12);
  EXPECT_NEAR(ProbGeqFuzzy(a, b, three), 0.1157, 1e-4);
}

TEST(ProbGeqFuzzyTest, Complementary) {
  std::mt19937_64 rng(9);
  const AlphaGrid grid = AlphaGrid::Uniform();
  for (int k = 0; k < 300; ++k) {
    T x = RandomTrapezoid(rng);
    T y = RandomTrapezoid(rng);
    if (x.c() - x.b() < 1e-6 || y.c() - y.b() < 1e-6) continue;
    EXPECT_NEAR(ProbGeqFuzzy(x, y, grid) + ProbGeqFuzzy(y, x, grid), 1.0, 1e-9);
  }
}

}  // namespace
}  // namespace fuzzytp
