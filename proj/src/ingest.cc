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

#include "fuzzytp/ingest.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/math/distributions/normal.hpp>

#include "fuzzytp/format.h"

namespace fuzzytp {

void ConfidenceLevels::Validate() const {
  if (!(core > 0.0 && core < support && support < 1.0)) {
    throw std::invalid_argument(
        "confidence levels must satisfy 0 < core < support < 1 (got core=" +
        std::to_string(core) + ", support=" + std::to_string(support) + ")");
  }
}

double BinnedHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0.0);
}

void BinnedHistogram::Validate() const {
  if (counts.empty() || bin_edges.size() != counts.size() + 1) {
    throw std::invalid_argument(
        "histogram needs m >= 1 counts and m + 1 edges");
  }
  for (double e : bin_edges) {
    if (!std::isfinite(e)) {
      throw std::invalid_argument("histogram edges must be finite");
    }
  }
  if (!is_point_mass()) {
    for (std::size_t k = 1; k < bin_edges.size(); ++k) {
      if (!(bin_edges[k] > bin_edges[k - 1])) {
        throw std::invalid_argument(
            "histogram edges must be strictly increasing");
      }
    }
  }
  for (double c : counts) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("histogram counts must be nonnegative");
    }
  }
  if (!(total() > 0.0)) {
    throw std::invalid_argument("histogram total count must be positive");
  }
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> xs,
                           std::vector<double> probabilities)
    : xs_(std::move(xs)), ps_(std::move(probabilities)) {}

EmpiricalCdf EmpiricalCdf::FromKnots(std::vector<double> xs,
                                     std::vector<double> probabilities) {
  if (xs.size() < 2 || xs.size() != probabilities.size()) {
    throw std::invalid_argument("CDF needs >= 2 matching knots");
  }
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!std::isfinite(xs[k]) || !std::isfinite(probabilities[k])) {
      throw std::invalid_argument("CDF knots must be finite");
    }
    if (k > 0 && (xs[k] < xs[k - 1] || probabilities[k] < probabilities[k - 1])) {
      throw std::invalid_argument("CDF knots must be nondecreasing");
    }
  }
  if (probabilities.front() != 0.0 || probabilities.back() != 1.0) {
    throw std::invalid_argument("CDF must run from 0 to 1");
  }
  return EmpiricalCdf(std::move(xs), std::move(probabilities));
}

EmpiricalCdf EmpiricalCdf::FromSamples(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("empty sample set");
  std::vector<double> xs(samples.begin(), samples.end());
  for (double v : xs) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite sample");
  }
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  if (n == 1) return EmpiricalCdf({xs[0], xs[0]}, {0.0, 1.0});
  std::vector<double> ps(n);
  for (std::size_t k = 0; k < n; ++k) {
    ps[k] = static_cast<double>(k) / static_cast<double>(n - 1);
  }
  return EmpiricalCdf(std::move(xs), std::move(ps));
}

EmpiricalCdf EmpiricalCdf::FromHistogram(const BinnedHistogram& histogram) {
  histogram.Validate();
  if (histogram.is_point_mass()) {
    return EmpiricalCdf({histogram.bin_edges[0], histogram.bin_edges[0]},
                        {0.0, 1.0});
  }
  const double total = histogram.total();
  std::vector<double> ps(histogram.bin_edges.size(), 0.0);
  double mass = 0.0;
  for (std::size_t k = 0; k < histogram.counts.size(); ++k) {
    mass += histogram.counts[k];
    ps[k + 1] = std::min(1.0, mass / total);
  }
  ps.back() = 1.0;
  return EmpiricalCdf(histogram.bin_edges, std::move(ps));
}

double EmpiricalCdf::operator()(double x) const {
  if (x < xs_.front()) return 0.0;
  if (x >= xs_.back()) return 1.0;
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - xs_.begin()) - 1;
  if (xs_[k] == x) return ps_[k];
  const double t = (x - xs_[k]) / (xs_[k + 1] - xs_[k]);
  return ps_[k] + t * (ps_[k + 1] - ps_[k]);
}

double EmpiricalCdf::Quantile(double p) const {
  p = std::clamp(p, 0.0, 1.0);
  const auto it = std::lower_bound(ps_.begin(), ps_.end(), p);
  const std::size_t k = static_cast<std::size_t>(it - ps_.begin());
  if (k == 0) return xs_.front();
  if (k >= ps_.size()) return xs_.back();
  const double t = (p - ps_[k - 1]) / (ps_[k] - ps_[k - 1]);
  return std::min(xs_[k], xs_[k - 1] + t * (xs_[k] - xs_[k - 1]));
}

Interval ConfidenceInterval(const EmpiricalCdf& cdf, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("confidence level must lie in (0, 1)");
  }
  const double lo = cdf.Quantile(0.5 * (1.0 - gamma));
  const double hi = cdf.Quantile(0.5 * (1.0 + gamma));
  return Interval::Make(lo, std::max(lo, hi));
}

TrapezoidalFuzzyNumber ToTrapezoid(const EmpiricalCdf& cdf,
                                   const ConfidenceLevels& levels) {
  levels.Validate();
  const Interval support = ConfidenceInterval(cdf, levels.support);
  const Interval core = ConfidenceInterval(cdf, levels.core);
  // Quantiles are monotone in p, so the core nests inside the support.
  return TrapezoidalFuzzyNumber::Make(support.lo(), core.lo(), core.hi(),
                                      support.hi());
}

double StandardNormalQuantile(double p) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

TrapezoidalFuzzyNumber GaussianToTrapezoid(double mean, double sigma,
                                           const ConfidenceLevels& levels) {
  levels.Validate();
  if (!(sigma >= 0.0) || !std::isfinite(sigma) || !std::isfinite(mean)) {
    throw std::invalid_argument("gaussian needs finite mean and sigma >= 0");
  }
  if (sigma == 0.0) return TrapezoidalFuzzyNumber::Crisp(mean);
  const double core_half = StandardNormalQuantile(0.5 * (1.0 + levels.core)) * sigma;
  const double support_half =
      StandardNormalQuantile(0.5 * (1.0 + levels.support)) * sigma;
  return TrapezoidalFuzzyNumber::Make(mean - support_half, mean - core_half,
                                      mean + core_half, mean + support_half);
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool ParseDouble(std::string_view text, double& out) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() &&
         std::isfinite(out);
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<double> ReadSamples(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    double v = 0.0;
    if (!ParseDouble(body, v)) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": not a finite number");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw std::runtime_error(path.string() + ": no samples");
  }
  return values;
}

BinnedHistogram ReadHistogramCsv(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  BinnedHistogram h;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    double cells[3];
    std::size_t start = 0;
    bool ok = true;
    for (int c = 0; c < 3 && ok; ++c) {
      const std::size_t comma = body.find(',', start);
      const bool last = c == 2;
      if (last != (comma == std::string_view::npos)) {
        ok = false;
        break;
      }
      const std::string_view cell =
          body.substr(start, last ? std::string_view::npos : comma - start);
      ok = ParseDouble(cell, cells[c]);
      start = comma + 1;
    }
    if (!ok) {
      if (line_no == 1 && h.counts.empty()) continue;  // header row
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected bin_lo,bin_hi,count");
    }
    const double lo = cells[0], hi = cells[1], count = cells[2];
    if (h.bin_edges.empty()) {
      h.bin_edges.push_back(lo);
    } else if (lo > h.bin_edges.back()) {
      // Gap between rows: fill with an empty bin.
      h.bin_edges.push_back(lo);
      h.counts.push_back(0.0);
    } else if (lo < h.bin_edges.back()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": overlapping bins");
    }
    h.bin_edges.push_back(hi);
    h.counts.push_back(count);
  }
  try {
    h.Validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  return h;
}

void WriteHistogramCsv(const std::filesystem::path& path,
                       const BinnedHistogram& histogram) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t k = 0; k < histogram.counts.size(); ++k) {
    out << FormatNumber(histogram.bin_edges[k]) << ','
        << FormatNumber(histogram.bin_edges[k + 1]) << ','
        << FormatNumber(histogram.counts[k]) << '\n';
  }
  if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace fuzzytp
