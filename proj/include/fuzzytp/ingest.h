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

// Conversion of empirical uncertainty (raw samples, binned histograms,
// Gaussian summaries) into trapezoidal fuzzy numbers.
//
// The cumulative function F is built first. Two central confidence
// intervals are then read off F: the narrow one (core level, 30% by
// default) becomes the core [b, c] and the wide one (support level, 90%
// by default) becomes the support [a, d].

#ifndef FUZZYTP_INGEST_H_
#define FUZZYTP_INGEST_H_

#include <filesystem>
#include <span>
#include <vector>

#include "fuzzytp/fuzzy_number.h"
#include "fuzzytp/interval.h"

namespace fuzzytp {

// Confidence levels used to carve a trapezoid out of a distribution.
struct ConfidenceLevels {
  double core = 0.30;
  double support = 0.90;

  // Throws std::invalid_argument unless 0 < core < support < 1.
  void Validate() const;
};

// Histogram with ascending edges (bin_edges.size() == counts.size() + 1).
// Edges are strictly increasing, except that a point mass may be stored as
// the single zero-width bin [v, v].
struct BinnedHistogram {
  std::vector<double> bin_edges;
  std::vector<double> counts;

  double total() const;
  bool is_point_mass() const {
    return counts.size() == 1 && bin_edges.size() == 2 &&
           bin_edges[0] == bin_edges[1];
  }
  // Throws std::invalid_argument on malformed shape, non-increasing
  // edges, negative counts or zero total.
  void Validate() const;

  friend bool operator==(const BinnedHistogram&, const BinnedHistogram&) = default;
};

// Continuous, nondecreasing, piecewise-linear cumulative distribution with
// F(support_min) = 0 and F(support_max) = 1. Repeated knot abscissae encode
// jumps (point masses).
class EmpiricalCdf {
 public:
  // Knots (x_k, k / (n - 1)) over the sorted sample; a single sample or a
  // constant sample yields a unit step. Throws on empty or non-finite input.
  static EmpiricalCdf FromSamples(std::span<const double> samples);
  // Linear within each bin, proportional to accumulated count mass.
  static EmpiricalCdf FromHistogram(const BinnedHistogram& histogram);
  // Arbitrary knots: xs nondecreasing, probabilities nondecreasing from 0
  // to 1. Mostly useful for analytic distributions in tests.
  static EmpiricalCdf FromKnots(std::vector<double> xs,
                                std::vector<double> probabilities);

  double support_min() const { return xs_.front(); }
  double support_max() const { return xs_.back(); }

  // F(x), right-continuous at jumps.
  double operator()(double x) const;
  // inf { x : F(x) >= p } for p in [0, 1].
  double Quantile(double p) const;

 private:
  EmpiricalCdf(std::vector<double> xs, std::vector<double> probabilities);

  std::vector<double> xs_;
  std::vector<double> ps_;
};

// Central equal-tail interval [F^-1((1 - gamma) / 2), F^-1((1 + gamma) / 2)].
// gamma must lie in (0, 1).
Interval ConfidenceInterval(const EmpiricalCdf& cdf, double gamma);

// (support.lo, core.lo, core.hi, support.hi).
TrapezoidalFuzzyNumber ToTrapezoid(const EmpiricalCdf& cdf,
                                   const ConfidenceLevels& levels = {});

// Analytic version for N(mean, sigma^2): m -/+ z((1 + gamma) / 2) sigma.
// sigma == 0 gives a crisp trapezoid; sigma < 0 throws.
TrapezoidalFuzzyNumber GaussianToTrapezoid(double mean, double sigma,
                                           const ConfidenceLevels& levels = {});

// Standard normal quantile.
double StandardNormalQuantile(double p);

// Text formats. Samples: one real per line (blank lines and lines starting
// with '#' ignored). Histograms: CSV rows "bin_lo,bin_hi,count" with an
// optional header line; consecutive rows must share edges.
std::vector<double> ReadSamples(const std::filesystem::path& path);
BinnedHistogram ReadHistogramCsv(const std::filesystem::path& path);
void WriteHistogramCsv(const std::filesystem::path& path,
                       const BinnedHistogram& histogram);

}  // namespace fuzzytp

#endif  // FUZZYTP_INGEST_H_
