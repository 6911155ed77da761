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

#include "fuzzytp/cli/problem_io.h"

#include <cmath>
#include <fstream>
#include <set>

namespace fuzzytp::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw ProblemFormatError(field + ": " + what);
}

std::string Indexed(const std::string& field, std::size_t k) {
  return field + "[" + std::to_string(k) + "]";
}

double ParseNumber(const json& node, const std::string& field) {
  if (!node.is_number()) Fail(field, "expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) Fail(field, "number must be finite");
  return v;
}

ParameterSource ParseParameter(const json& node, const std::string& field) {
  using Kind = ParameterSource::Kind;
  if (node.is_number()) return ParameterSource::Crisp(ParseNumber(node, field));
  if (node.is_array()) {
    if (node.size() != 4) Fail(field, "trapezoid needs exactly 4 numbers");
    ParameterSource p{Kind::kTrapezoid, {}, {}};
    for (std::size_t k = 0; k < 4; ++k) {
      p.values[k] = ParseNumber(node[k], Indexed(field, k));
    }
    try {
      TrapezoidalFuzzyNumber::Make(p.values[0], p.values[1], p.values[2],
                                   p.values[3]);
    } catch (const std::invalid_argument& e) {
      Fail(field, e.what());
    }
    return p;
  }
  if (!node.is_object()) {
    Fail(field, "expected a number, a 4-element array or an object");
  }
  const json* spec = &node;
  if (node.contains("gaussian")) {
    if (node.size() != 1) Fail(field, "unexpected keys next to \"gaussian\"");
    spec = &node.at("gaussian");
    if (!spec->is_object()) Fail(field + ".gaussian", "expected an object");
  }
  if (spec->contains("mean") || spec->contains("sigma")) {
    for (const auto& [key, value] : spec->items()) {
      if (key != "mean" && key != "sigma") {
        Fail(field, "unknown key \"" + key + "\" in gaussian");
      }
    }
    if (!spec->contains("mean") || !spec->contains("sigma")) {
      Fail(field, "gaussian needs both \"mean\" and \"sigma\"");
    }
    const double mean = ParseNumber(spec->at("mean"), field + ".mean");
    const double sigma = ParseNumber(spec->at("sigma"), field + ".sigma");
    if (sigma < 0.0) Fail(field + ".sigma", "must be >= 0");
    return ParameterSource::Gaussian(mean, sigma);
  }
  for (const auto& [key, kind] :
       {std::pair{"histogram", Kind::kHistogram}, std::pair{"samples", Kind::kSamples}}) {
    if (!node.contains(key)) continue;
    if (node.size() != 1) Fail(field, std::string("unexpected keys next to \"") + key + "\"");
    const json& path = node.at(key);
    if (!path.is_string() || path.get<std::string>().empty()) {
      Fail(field + "." + key, "expected a file path");
    }
    return ParameterSource{kind, {}, path.get<std::string>()};
  }
  Fail(field, "object must be a gaussian {mean, sigma}, {\"histogram\": path} "
              "or {\"samples\": path}");
}

std::vector<ParameterSource> ParseVector(const json& root, const std::string& field,
                                         std::optional<std::size_t> expected) {
  if (!root.contains(field)) Fail(field, "missing");
  const json& node = root.at(field);
  if (!node.is_array() || node.empty()) Fail(field, "expected a nonempty array");
  if (expected && node.size() != *expected) {
    Fail(field, "expected " + std::to_string(*expected) + " entries, got " +
                    std::to_string(node.size()));
  }
  std::vector<ParameterSource> out;
  for (std::size_t k = 0; k < node.size(); ++k) {
    out.push_back(ParseParameter(node[k], Indexed(field, k)));
  }
  return out;
}

void CheckSchemaVersion(const json& root) {
  if (!root.is_object()) Fail("<root>", "expected a JSON object");
  if (!root.contains("schema_version")) Fail("schema_version", "missing");
  const json& v = root.at("schema_version");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
    Fail("schema_version", "unsupported (expected " +
                               std::to_string(kSchemaVersion) + ")");
  }
}

void CheckKnownKeys(const json& root, const std::set<std::string>& known) {
  for (const auto& [key, value] : root.items()) {
    if (!known.count(key)) Fail(key, "unknown field");
  }
}

DistributionDocument ParseDistribution(const json& root, const fs::path& base_dir) {
  CheckKnownKeys(root, {"schema_version", "kind", "description", "supply_max",
                        "demand_max", "purchase_min", "sale_min",
                        "purchase_price_reduced", "sale_price_reduced",
                        "transport_cost", "purchase_price_contract",
                        "sale_price_contract"});
  DistributionDocument doc;
  doc.base_dir = base_dir;
  doc.supply_max = ParseVector(root, "supply_max", std::nullopt);
  const std::size_t m = doc.supply_max.size();
  doc.demand_max = ParseVector(root, "demand_max", std::nullopt);
  const std::size_t n = doc.demand_max.size();
  doc.purchase_min = ParseVector(root, "purchase_min", m);
  doc.sale_min = ParseVector(root, "sale_min", n);
  doc.purchase_price_reduced = ParseVector(root, "purchase_price_reduced", m);
  doc.sale_price_reduced = ParseVector(root, "sale_price_reduced", n);
  if (root.contains("purchase_price_contract")) {
    doc.purchase_price_contract = ParseVector(root, "purchase_price_contract", m);
  }
  if (root.contains("sale_price_contract")) {
    doc.sale_price_contract = ParseVector(root, "sale_price_contract", n);
  }

  if (!root.contains("transport_cost")) Fail("transport_cost", "missing");
  const json& cost = root.at("transport_cost");
  if (!cost.is_array() || cost.size() != m) {
    Fail("transport_cost", "expected " + std::to_string(m) + " rows");
  }
  doc.transport_cost = Grid<ParameterSource>(static_cast<int>(m), static_cast<int>(n));
  for (std::size_t i = 0; i < m; ++i) {
    const std::string row_field = Indexed("transport_cost", i);
    if (!cost[i].is_array() || cost[i].size() != n) {
      Fail(row_field, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      doc.transport_cost(static_cast<int>(i), static_cast<int>(j)) =
          ParseParameter(cost[i][j], Indexed(row_field, j));
    }
  }
  return doc;
}

std::vector<double> ParseNumbers(const json& root, const std::string& field) {
  if (!root.contains(field)) Fail(field, "missing");
  const json& node = root.at(field);
  if (!node.is_array() || node.empty()) Fail(field, "expected a nonempty array");
  std::vector<double> out;
  for (std::size_t k = 0; k < node.size(); ++k) {
    out.push_back(ParseNumber(node[k], Indexed(field, k)));
  }
  return out;
}

TransportDocument ParseTransport(const json& root) {
  CheckKnownKeys(root, {"schema_version", "kind", "description", "objective",
                        "supplies", "demands", "costs"});
  TransportDocument doc;
  if (root.contains("objective")) {
    const json& o = root.at("objective");
    if (o == "min") {
      doc.objective = TransportObjective::kMinimize;
    } else if (o == "max") {
      doc.objective = TransportObjective::kMaximize;
    } else {
      Fail("objective", "expected \"min\" or \"max\"");
    }
  }
  doc.instance.supplies = ParseNumbers(root, "supplies");
  doc.instance.demands = ParseNumbers(root, "demands");
  const std::size_t m = doc.instance.supplies.size();
  const std::size_t n = doc.instance.demands.size();
  if (!root.contains("costs")) Fail("costs", "missing");
  const json& costs = root.at("costs");
  if (!costs.is_array() || costs.size() != m) {
    Fail("costs", "expected " + std::to_string(m) + " rows");
  }
  doc.instance.costs = Grid<double>(static_cast<int>(m), static_cast<int>(n));
  for (std::size_t i = 0; i < m; ++i) {
    if (!costs[i].is_array() || costs[i].size() != n) {
      Fail(Indexed("costs", i), "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      doc.instance.costs(static_cast<int>(i), static_cast<int>(j)) =
          ParseNumber(costs[i][j], Indexed(Indexed("costs", i), j));
    }
  }
  try {
    doc.instance.Validate();
  } catch (const std::invalid_argument& e) {
    Fail("<root>", e.what());
  }
  return doc;
}

TrapezoidalFuzzyNumber NormalizeParameter(const ParameterSource& p,
                                          const fs::path& base_dir,
                                          const ConfidenceLevels& levels,
                                          const std::string& field) {
  using Kind = ParameterSource::Kind;
  try {
    switch (p.kind) {
      case Kind::kCrisp:
        return TrapezoidalFuzzyNumber::Crisp(p.values[0]);
      case Kind::kTrapezoid:
        return TrapezoidalFuzzyNumber::Make(p.values[0], p.values[1],
                                            p.values[2], p.values[3]);
      case Kind::kGaussian:
        return GaussianToTrapezoid(p.values[0], p.values[1], levels);
      case Kind::kHistogram:
        return ToTrapezoid(
            EmpiricalCdf::FromHistogram(ReadHistogramCsv(base_dir / p.path)),
            levels);
      case Kind::kSamples:
        return ToTrapezoid(EmpiricalCdf::FromSamples(ReadSamples(base_dir / p.path)),
                           levels);
    }
  } catch (const ProblemFormatError&) {
    throw;
  } catch (const std::exception& e) {
    Fail(field, e.what());
  }
  Fail(field, "unknown parameter kind");
}

std::vector<Fuzzy> NormalizeVector(const std::vector<ParameterSource>& v,
                                   const fs::path& base_dir,
                                   const ConfidenceLevels& levels,
                                   const std::string& field) {
  std::vector<Fuzzy> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(NormalizeParameter(v[k], base_dir, levels, Indexed(field, k)));
  }
  return out;
}

GaussianSpec ToSpec(const ParameterSource& p, const std::string& field) {
  using Kind = ParameterSource::Kind;
  if (p.kind == Kind::kCrisp) return {p.values[0], 0.0};
  if (p.kind == Kind::kGaussian) return {p.values[0], p.values[1]};
  Fail(field, "Monte Carlo sampling needs crisp or gaussian parameters");
}

std::vector<GaussianSpec> ToSpecs(const std::vector<ParameterSource>& v,
                                  const std::string& field) {
  std::vector<GaussianSpec> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(ToSpec(v[k], Indexed(field, k)));
  }
  return out;
}

json ExportParameter(const ParameterSource& p, const fs::path& base_dir,
                     const fs::path& target_dir) {
  using Kind = ParameterSource::Kind;
  switch (p.kind) {
    case Kind::kCrisp:
      return p.values[0];
    case Kind::kTrapezoid:
      return json::array({p.values[0], p.values[1], p.values[2], p.values[3]});
    case Kind::kGaussian:
      return json{{"mean", p.values[0]}, {"sigma", p.values[1]}};
    case Kind::kHistogram:
    case Kind::kSamples: {
      std::string path = p.path;
      if (fs::absolute(base_dir).lexically_normal() !=
          fs::absolute(target_dir).lexically_normal()) {
        const fs::path full = fs::absolute(base_dir / p.path).lexically_normal();
        path = full.lexically_relative(fs::absolute(target_dir).lexically_normal())
                   .generic_string();
      }
      return json{{p.kind == Kind::kHistogram ? "histogram" : "samples", path}};
    }
  }
  return nullptr;
}

json ExportVector(const std::vector<ParameterSource>& v, const fs::path& base_dir,
                  const fs::path& target_dir) {
  json out = json::array();
  for (const ParameterSource& p : v) out.push_back(ExportParameter(p, base_dir, target_dir));
  return out;
}

}  // namespace

ProblemDocument ParseProblem(const json& root, const fs::path& base_dir) {
  CheckSchemaVersion(root);
  if (!root.contains("kind") || !root.at("kind").is_string()) {
    Fail("kind", "missing (expected \"distribution\" or \"transportation\")");
  }
  const std::string kind = root.at("kind").get<std::string>();
  if (kind == "distribution") return ParseDistribution(root, base_dir);
  if (kind == "transportation") return ParseTransport(root);
  Fail("kind", "unknown kind \"" + kind + "\"");
}

ProblemDocument ParseProblemFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ProblemFormatError(path.string() + ": invalid JSON: " + e.what());
  }
  try {
    return ParseProblem(root, path.parent_path());
  } catch (const ProblemFormatError& e) {
    throw ProblemFormatError(path.string() + ": " + e.what());
  }
}

DistributionProblem Normalize(const DistributionDocument& doc,
                              const ConfidenceLevels& levels) {
  levels.Validate();
  const fs::path& base = doc.base_dir;
  DistributionProblem p;
  p.supply_max = NormalizeVector(doc.supply_max, base, levels, "supply_max");
  p.demand_max = NormalizeVector(doc.demand_max, base, levels, "demand_max");
  p.purchase_min = NormalizeVector(doc.purchase_min, base, levels, "purchase_min");
  p.sale_min = NormalizeVector(doc.sale_min, base, levels, "sale_min");
  p.purchase_price_reduced = NormalizeVector(doc.purchase_price_reduced, base,
                                             levels, "purchase_price_reduced");
  p.sale_price_reduced =
      NormalizeVector(doc.sale_price_reduced, base, levels, "sale_price_reduced");
  p.transport_cost =
      Grid<Fuzzy>(doc.transport_cost.rows(), doc.transport_cost.cols());
  for (int i = 0; i < doc.transport_cost.rows(); ++i) {
    for (int j = 0; j < doc.transport_cost.cols(); ++j) {
      p.transport_cost(i, j) = NormalizeParameter(
          doc.transport_cost(i, j), base, levels,
          Indexed(Indexed("transport_cost", i), j));
    }
  }
  if (doc.purchase_price_contract) {
    p.purchase_price_contract = NormalizeVector(
        *doc.purchase_price_contract, base, levels, "purchase_price_contract");
  }
  if (doc.sale_price_contract) {
    p.sale_price_contract =
        NormalizeVector(*doc.sale_price_contract, base, levels, "sale_price_contract");
  }
  p.Validate();
  return p;
}

GaussianModel ToGaussianModel(const DistributionDocument& doc) {
  GaussianModel model;
  model.supply_max = ToSpecs(doc.supply_max, "supply_max");
  model.demand_max = ToSpecs(doc.demand_max, "demand_max");
  model.purchase_min = ToSpecs(doc.purchase_min, "purchase_min");
  model.sale_min = ToSpecs(doc.sale_min, "sale_min");
  model.purchase_price_reduced =
      ToSpecs(doc.purchase_price_reduced, "purchase_price_reduced");
  model.sale_price_reduced = ToSpecs(doc.sale_price_reduced, "sale_price_reduced");
  model.transport_cost =
      Grid<GaussianSpec>(doc.transport_cost.rows(), doc.transport_cost.cols());
  for (int i = 0; i < doc.transport_cost.rows(); ++i) {
    for (int j = 0; j < doc.transport_cost.cols(); ++j) {
      model.transport_cost(i, j) = ToSpec(
          doc.transport_cost(i, j), Indexed(Indexed("transport_cost", i), j));
    }
  }
  model.Validate();
  return model;
}

json ExportProblem(const DistributionDocument& doc, const fs::path& target_dir) {
  const fs::path& base = doc.base_dir;
  json root;
  root["schema_version"] = kSchemaVersion;
  root["kind"] = "distribution";
  root["supply_max"] = ExportVector(doc.supply_max, base, target_dir);
  root["demand_max"] = ExportVector(doc.demand_max, base, target_dir);
  root["purchase_min"] = ExportVector(doc.purchase_min, base, target_dir);
  root["sale_min"] = ExportVector(doc.sale_min, base, target_dir);
  root["purchase_price_reduced"] =
      ExportVector(doc.purchase_price_reduced, base, target_dir);
  root["sale_price_reduced"] = ExportVector(doc.sale_price_reduced, base, target_dir);
  json cost = json::array();
  for (int i = 0; i < doc.transport_cost.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < doc.transport_cost.cols(); ++j) {
      row.push_back(ExportParameter(doc.transport_cost(i, j), base, target_dir));
    }
    cost.push_back(std::move(row));
  }
  root["transport_cost"] = std::move(cost);
  if (doc.purchase_price_contract) {
    root["purchase_price_contract"] =
        ExportVector(*doc.purchase_price_contract, base, target_dir);
  }
  if (doc.sale_price_contract) {
    root["sale_price_contract"] =
        ExportVector(*doc.sale_price_contract, base, target_dir);
  }
  return root;
}

json ExportProblem(const TransportDocument& doc) {
  json root;
  root["schema_version"] = kSchemaVersion;
  root["kind"] = "transportation";
  root["objective"] =
      doc.objective == TransportObjective::kMaximize ? "max" : "min";
  root["supplies"] = doc.instance.supplies;
  root["demands"] = doc.instance.demands;
  json costs = json::array();
  for (int i = 0; i < doc.instance.costs.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < doc.instance.costs.cols(); ++j) {
      row.push_back(doc.instance.costs(i, j));
    }
    costs.push_back(std::move(row));
  }
  root["costs"] = std::move(costs);
  return root;
}

}  // namespace fuzzytp::cli
