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

#ifndef FUZZYTP_FUZZY_NUMBER_H_
#define FUZZYTP_FUZZY_NUMBER_H_

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "fuzzytp/interval.h"

namespace fuzzytp {

// Trapezoidal fuzzy number (a, b, c, d) with a <= b <= c <= d.
// Support is [a, d], core is [b, c]. A crisp value v is (v, v, v, v).
class TrapezoidalFuzzyNumber {
 public:
  TrapezoidalFuzzyNumber() = default;

  // Throws std::invalid_argument unless a <= b <= c <= d, all finite.
  static TrapezoidalFuzzyNumber Make(double a, double b, double c, double d);
  static TrapezoidalFuzzyNumber Crisp(double value) {
    return Make(value, value, value, value);
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  std::array<double, 4> quadruple() const { return {a_, b_, c_, d_}; }

  bool is_crisp() const { return a_ == d_; }
  Interval support() const { return Interval::Make(a_, d_); }
  Interval core() const { return Interval::Make(b_, c_); }

  // Piecewise-linear membership degree in [0, 1]. A zero-length ramp
  // (a == b or c == d) evaluates to 1 at the shared point.
  double Membership(double x) const;

  // [a + alpha (b - a), d - alpha (d - c)]. Throws for alpha outside [0, 1].
  Interval AlphaCut(double alpha) const;

  friend bool operator==(const TrapezoidalFuzzyNumber&,
                         const TrapezoidalFuzzyNumber&) = default;

 private:
  TrapezoidalFuzzyNumber(double a, double b, double c, double d)
      : a_(a), b_(b), c_(c), d_(d) {}

  friend TrapezoidalFuzzyNumber operator+(const TrapezoidalFuzzyNumber&,
                                          const TrapezoidalFuzzyNumber&);
  friend TrapezoidalFuzzyNumber operator-(const TrapezoidalFuzzyNumber&,
                                          const TrapezoidalFuzzyNumber&);
  friend TrapezoidalFuzzyNumber Scale(const TrapezoidalFuzzyNumber&, double);

  double a_ = 0.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
};

// Exact arithmetic for linear combinations; each alpha-cut of the result
// is the interval sum/difference of the operands' cuts.
TrapezoidalFuzzyNumber operator+(const TrapezoidalFuzzyNumber& x,
                                 const TrapezoidalFuzzyNumber& y);
TrapezoidalFuzzyNumber operator-(const TrapezoidalFuzzyNumber& x,
                                 const TrapezoidalFuzzyNumber& y);
// k must be >= 0.
TrapezoidalFuzzyNumber Scale(const TrapezoidalFuzzyNumber& x, double k);

std::ostream& operator<<(std::ostream& os, const TrapezoidalFuzzyNumber& t);

// Ascending alpha levels in [0, 1], starting at 0 and ending at 1.
class AlphaGrid {
 public:
  inline static constexpr int kDefaultLevelCount = 11;

  // count >= 2 equally spaced levels: {0, 1/(count-1), ..., 1}.
  static AlphaGrid Uniform(int count = kDefaultLevelCount);
  // Throws unless strictly increasing, first 0, last 1, size >= 2.
  static AlphaGrid FromLevels(std::vector<double> levels);

  std::span<const double> levels() const { return levels_; }
  int size() const { return static_cast<int>(levels_.size()); }
  double operator[](int k) const { return levels_[k]; }

 private:
  explicit AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {}
  std::vector<double> levels_;
};

// Mean over grid levels of ProbGeq(AlphaCut(x, alpha), AlphaCut(y, alpha)).
double ProbGeqFuzzy(const TrapezoidalFuzzyNumber& x,
                    const TrapezoidalFuzzyNumber& y, const AlphaGrid& grid);

}  // namespace fuzzytp

#endif  // FUZZYTP_FUZZY_NUMBER_H_
