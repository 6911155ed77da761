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

// Closed real intervals, the arithmetic needed to push alpha-cuts through
// linear expressions, and the probabilistic "A >= B" ordering used to
// compare uncertain quantities.

#ifndef FUZZYTP_INTERVAL_H_
#define FUZZYTP_INTERVAL_H_

#include <iosfwd>

namespace fuzzytp {

// Absolute tolerance applied to every endpoint comparison.
inline constexpr double kEndpointTolerance = 1e-9;

// A closed interval [lo, hi] with finite endpoints and lo <= hi.
// Point intervals (lo == hi) are allowed.
class Interval {
 public:
  // The point interval [0, 0].
  Interval() = default;

  // Throws std::invalid_argument if lo > hi or either endpoint is not
  // finite.
  static Interval Make(double lo, double hi);
  static Interval Point(double value) { return Make(value, value); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double midpoint() const { return 0.5 * (lo_ + hi_); }
  bool is_point() const { return hi_ - lo_ <= kEndpointTolerance; }

  bool Contains(double x, double tol = kEndpointTolerance) const {
    return x >= lo_ - tol && x <= hi_ + tol;
  }
  bool Contains(const Interval& other,
                double tol = kEndpointTolerance) const {
    return other.lo_ >= lo_ - tol && other.hi_ <= hi_ + tol;
  }

  // Smallest interval containing both.
  Interval Hull(const Interval& other) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {}

  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval Scale(const Interval& a, double k);

// P(x >= y) for x ~ Uniform(a) and y ~ Uniform(b) drawn independently.
// A point interval is treated as a point mass; two coincident points give
// 0.5. The result lies in [0, 1].
double ProbGeq(const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& interval);

}  // namespace fuzzytp

#endif  // FUZZYTP_INTERVAL_H_
