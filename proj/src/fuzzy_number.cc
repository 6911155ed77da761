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

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fuzzytp {

TrapezoidalFuzzyNumber TrapezoidalFuzzyNumber::Make(double a, double b,
                                                    double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d)) {
    throw std::invalid_argument("trapezoid parameters must be finite");
  }
  if (!(a <= b && b <= c && c <= d)) {
    std::ostringstream msg;
    msg << "trapezoid (" << a << ", " << b << ", " << c << ", " << d
        << ") violates a <= b <= c <= d";
    throw std::invalid_argument(msg.str());
  }
  return TrapezoidalFuzzyNumber(a, b, c, d);
}

double TrapezoidalFuzzyNumber::Membership(double x) const {
  if (x < a_ || x > d_) return 0.0;
  if (x >= b_ && x <= c_) return 1.0;
  if (x < b_) return (x - a_) / (b_ - a_);
  return (d_ - x) / (d_ - c_);
}

Interval TrapezoidalFuzzyNumber::AlphaCut(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  // The two ends are clamped to the core so rounding cannot cross them.
  double lo = a_ + alpha * (b_ - a_);
  double hi = d_ - alpha * (d_ - c_);
  if (lo > b_) lo = b_;
  if (hi < c_) hi = c_;
  return Interval::Make(lo, hi);
}

TrapezoidalFuzzyNumber operator+(const TrapezoidalFuzzyNumber& x,
                                 const TrapezoidalFuzzyNumber& y) {
  return TrapezoidalFuzzyNumber(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_,
                                x.d_ + y.d_);
}

TrapezoidalFuzzyNumber operator-(const TrapezoidalFuzzyNumber& x,
                                 const TrapezoidalFuzzyNumber& y) {
  return TrapezoidalFuzzyNumber(x.a_ - y.d_, x.b_ - y.c_, x.c_ - y.b_,
                                x.d_ - y.a_);
}

TrapezoidalFuzzyNumber Scale(const TrapezoidalFuzzyNumber& x, double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("trapezoid scale factor must be >= 0");
  }
  return TrapezoidalFuzzyNumber(x.a_ * k, x.b_ * k, x.c_ * k, x.d_ * k);
}

std::ostream& operator<<(std::ostream& os, const TrapezoidalFuzzyNumber& t) {
  return os << '(' << t.a() << ", " << t.b() << ", " << t.c() << ", "
            << t.d() << ')';
}

AlphaGrid AlphaGrid::Uniform(int count) {
  if (count < 2) throw std::invalid_argument("alpha grid needs >= 2 levels");
  std::vector<double> levels(count);
  for (int k = 0; k < count; ++k) {
    levels[k] = static_cast<double>(k) / (count - 1);
  }
  return AlphaGrid(std::move(levels));
}

AlphaGrid AlphaGrid::FromLevels(std::vector<double> levels) {
  if (levels.size() < 2 || levels.front() != 0.0 || levels.back() != 1.0) {
    throw std::invalid_argument(
        "alpha grid must have >= 2 levels starting at 0 and ending at 1");
  }
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (!(levels[k] > levels[k - 1])) {
      throw std::invalid_argument("alpha levels must be strictly increasing");
    }
  }
  return AlphaGrid(std::move(levels));
}

double ProbGeqFuzzy(const TrapezoidalFuzzyNumber& x,
                    const TrapezoidalFuzzyNumber& y, const AlphaGrid& grid) {
  double total = 0.0;
  for (double alpha : grid.levels()) {
    total += ProbGeq(x.AlphaCut(alpha), y.AlphaCut(alpha));
  }
  return total / grid.size();
}

}  // namespace fuzzytp
