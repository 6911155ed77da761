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

#include "fuzzytp/interval.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fuzzytp {

Interval Interval::Make(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("Interval endpoints must be finite");
  }
  if (lo > hi) {
    throw std::invalid_argument("Interval lower endpoint " +
                                std::to_string(lo) + " exceeds upper " +
                                std::to_string(hi));
  }
  return Interval(lo, hi);
}

Interval Interval::Hull(const Interval& other) const {
  return Interval(std::min(lo_, other.lo_), std::max(hi_, other.hi_));
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval::Make(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval::Make(a.lo() - b.hi(), a.hi() - b.lo());
}

Interval operator*(const Interval& a, const Interval& b) {
  const double p[] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(),
                      a.hi() * b.hi()};
  const auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
  return Interval::Make(*lo, *hi);
}

Interval Scale(const Interval& a, double k) {
  if (k >= 0.0) return Interval::Make(a.lo() * k, a.hi() * k);
  return Interval::Make(a.hi() * k, a.lo() * k);
}

namespace {

// Antiderivative of G(t) = clamp((t - b.lo) / width(b), 0, 1), anchored so
// that it vanishes for t <= b.lo.
double CdfIntegral(double t, const Interval& b) {
  const double w = b.width();
  if (t <= b.lo()) return 0.0;
  if (t >= b.hi()) return 0.5 * w + (t - b.hi());
  const double s = t - b.lo();
  return s * s / (2.0 * w);
}

}  // namespace

double ProbGeq(const Interval& a, const Interval& b) {
  const bool a_point = a.is_point();
  const bool b_point = b.is_point();
  if (a_point && b_point) {
    const double diff = a.midpoint() - b.midpoint();
    if (std::abs(diff) <= kEndpointTolerance) return 0.5;
    return diff > 0.0 ? 1.0 : 0.0;
  }
  if (a.lo() >= b.hi()) return 1.0;
  if (a.hi() <= b.lo()) return 0.0;
  if (a_point) {
    return std::clamp((a.midpoint() - b.lo()) / b.width(), 0.0, 1.0);
  }
  if (b_point) {
    return std::clamp((a.hi() - b.midpoint()) / a.width(), 0.0, 1.0);
  }
  const double area = CdfIntegral(a.hi(), b) - CdfIntegral(a.lo(), b);
  return std::clamp(area / a.width(), 0.0, 1.0);
}

std::ostream& operator<<(std::ostream& os, const Interval& interval) {
  return os << '[' << interval.lo() << ", " << interval.hi() << ']';
}

}  // namespace fuzzytp
