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

#include "fuzzytp/cli/run.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fuzzytp/cli/problem_io.h"
#include "fuzzytp/distribution_model.h"
#include "fuzzytp/format.h"
#include "fuzzytp/fuzzy_solver.h"
#include "fuzzytp/monte_carlo.h"
#include "fuzzytp/simplex.h"
#include "fuzzytp/transport.h"

namespace fuzzytp::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Solver outcome that maps to kExitInfeasible.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Mode>& ModeNames() {
  static const auto* names = new std::map<std::string, Mode>{
      {"crisp", Mode::kCrisp},
      {"fuzzy", Mode::kFuzzy},
      {"montecarlo", Mode::kMonteCarlo},
      {"compare", Mode::kCompare},
      {"ingest", Mode::kIngest},
  };
  return *names;
}

json Rounded(const json& node) {
  if (node.is_number_float()) {
    const double v = node.get<double>();
    if (!std::isfinite(v)) return nullptr;
    return RoundForOutput(v);
  }
  if (node.is_array() || node.is_object()) {
    json out = node;
    for (auto it = out.begin(); it != out.end(); ++it) *it = Rounded(*it);
    return out;
  }
  return node;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void WriteJson(const fs::path& path, const json& root) {
  WriteText(path, Rounded(root).dump(2) + "\n");
}

json ToJson(const TrapezoidalFuzzyNumber& t) {
  return json::array({t.a(), t.b(), t.c(), t.d()});
}

json ToJson(const ConfidenceLevels& levels) {
  return json{{"core", levels.core}, {"support", levels.support}};
}

json ShipmentsJson(const Grid<double>& x) {
  json out = json::object();
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) out[ShipmentLabel(i, j)] = x(i, j);
  }
  return out;
}

Grid<double> ShipmentGrid(const std::vector<double>& x, int m, int n) {
  Grid<double> g(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = x[static_cast<std::size_t>(i) * n + j];
  }
  return g;
}

// --- crisp ---------------------------------------------------------------

int RunCrisp(const DistributionDocument& doc, const RunConfig& config,
             std::ostream& out) {
  const CrispInstance instance =
      CoreMidpointInstance(Normalize(doc, config.levels));
  const PrecheckReport precheck = FeasibilityPrecheck(instance);
  json violations = json::array();
  for (const PrecheckViolation& v : precheck.violations) {
    violations.push_back(v.Describe());
  }
  json root;
  root["kind"] = "distribution";
  root["precheck"] = {{"passed", precheck.passed()}, {"violations", violations}};

  SimplexSolution solution{SolveStatus::kInfeasible, {}, 0.0, 0};
  if (precheck.passed()) solution = Solve(ToLinearProgram(instance));
  root["status"] = std::string(ToString(solution.status));
  if (solution.status == SolveStatus::kOptimal) {
    root["benefit"] = solution.objective_value;
    root["shipments"] = ShipmentsJson(ShipmentGrid(
        solution.x, instance.num_wholesalers(), instance.num_consumers()));
  }
  WriteJson(config.output_dir / "crisp_solution.json", root);

  if (solution.status == SolveStatus::kInfeasible) {
    throw InfeasibleError("crisp problem is infeasible");
  }
  if (solution.status != SolveStatus::kOptimal) {
    throw std::runtime_error("crisp problem is " +
                             std::string(ToString(solution.status)));
  }
  out << "D* = " << FormatNumber(solution.objective_value) << "\n";
  return kExitOk;
}

int RunCrisp(const TransportDocument& doc, const RunConfig& config,
             std::ostream& out) {
  const TransportInstance& instance = doc.instance;
  const bool maximize = doc.objective == TransportObjective::kMaximize;
  json root;
  root["kind"] = "transportation";
  root["objective"] = maximize ? "max" : "min";
  if (!CheckBalance(instance)) {
    root["status"] = "infeasible";
    WriteJson(config.output_dir / "crisp_solution.json", root);
    throw InfeasibleError("transportation problem is unbalanced");
  }
  const TransportPlan start =
      VogelApproximation(maximize ? Negated(instance) : instance);
  const TransportPlan plan = ModiOptimize(instance, start, doc.objective);
  const double value = PlanValue(instance, plan);
  const SimplexSolution check = Solve(ToLinearProgram(instance, doc.objective));
  if (check.status != SolveStatus::kOptimal ||
      std::abs(check.objective_value - value) > 1e-6 * (1.0 + std::abs(value))) {
    throw std::runtime_error("potentials method and simplex disagree");
  }
  json basis = json::array();
  for (const Cell& c : plan.basis) basis.push_back(ShipmentLabel(c.row, c.col));
  root["status"] = "optimal";
  root["objective_value"] = value;
  root["simplex_objective_value"] = check.objective_value;
  root["shipments"] = ShipmentsJson(plan.shipments);
  root["basis"] = basis;
  WriteJson(config.output_dir / "crisp_solution.json", root);
  out << "objective = " << FormatNumber(value) << "\n";
  return kExitOk;
}

// --- fuzzy ---------------------------------------------------------------

std::vector<std::pair<std::string, Quantity>> Quantities(int m, int n) {
  std::vector<std::pair<std::string, Quantity>> q{{"D", Quantity::Benefit()}};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) q.emplace_back(ShipmentLabel(i, j), Quantity::Shipment(i, j));
  }
  return q;
}

void WriteFuzzyOutputs(const FuzzySolution& solution, const RunConfig& config) {
  const auto quantities =
      Quantities(solution.num_wholesalers, solution.num_consumers);
  std::ostringstream csv;
  csv << "alpha";
  for (const auto& [name, q] : quantities) csv << ',' << name << "_lo," << name << "_hi";
  csv << ",feasible,repaired\n";
  for (const LevelSolution& level : solution.levels) {
    csv << FormatNumber(level.alpha);
    for (const auto& [name, q] : quantities) {
      if (level.feasible) {
        const Interval v = LevelInterval(level, q);
        csv << ',' << FormatNumber(v.lo()) << ',' << FormatNumber(v.hi());
      } else {
        csv << ",,";
      }
    }
    csv << ',' << (level.feasible ? 1 : 0) << ',' << (level.repaired ? 1 : 0)
        << '\n';
  }
  WriteText(config.output_dir / "fuzzy_levels.csv", csv.str());

  json quadruples = json::object();
  const bool ends_feasible =
      solution.levels.front().feasible && solution.levels.back().feasible;
  for (const auto& [name, q] : quantities) {
    quadruples[name] = ends_feasible ? ToJson(FitTrapezoid(solution, q)) : json();
  }
  json repaired = json::array();
  json infeasible = json::array();
  for (const LevelSolution& level : solution.levels) {
    if (level.repaired) repaired.push_back(level.alpha);
    if (!level.feasible) infeasible.push_back(level.alpha);
  }
  json root;
  root["alpha_levels"] = solution.grid.size();
  root["confidence_levels"] = ToJson(config.levels);
  root["quadruples"] = quadruples;
  root["nesting_adjusted"] = solution.nesting_adjusted;
  root["repaired_levels"] = repaired;
  root["infeasible_levels"] = infeasible;
  WriteJson(config.output_dir / "fuzzy_quadruples.json", root);
}

FuzzySolution SolveAndWriteFuzzy(const DistributionDocument& doc,
                                 const RunConfig& config, std::ostream& out) {
  const DistributionProblem problem = Normalize(doc, config.levels);
  FuzzySolveOptions options;
  options.execution = config.execution;
  FuzzySolution solution =
      SolveFuzzy(problem, AlphaGrid::Uniform(config.alpha_levels), options);
  WriteFuzzyOutputs(solution, config);
  if (solution.all_infeasible()) {
    throw InfeasibleError("no alpha level is feasible");
  }
  const LevelSolution& top = solution.levels.back();
  const LevelSolution& bottom = solution.levels.front();
  if (bottom.feasible && top.feasible) {
    const TrapezoidalFuzzyNumber d = FitTrapezoid(solution, Quantity::Benefit());
    out << "fuzzy D = (" << FormatNumber(d.a()) << ", " << FormatNumber(d.b())
        << ", " << FormatNumber(d.c()) << ", " << FormatNumber(d.d()) << ")\n";
  }
  return solution;
}

// --- Monte Carlo ---------------------------------------------------------

json SummaryJson(const QuantitySummary& s, const ConfidenceLevels& levels,
                 const std::string& file) {
  json q;
  q["feasible_samples"] = s.samples.size();
  if (s.samples.empty()) return q;
  q["mean"] = s.mean;
  q["stddev"] = s.stddev;
  q["min"] = s.histogram.bin_edges.front();
  q["max"] = s.histogram.bin_edges.back();
  q["bins"] = s.histogram.counts.size();
  q["histogram_file"] = file;
  q["trapezoid"] =
      ToJson(ToTrapezoid(EmpiricalCdf::FromHistogram(s.histogram), levels));
  return q;
}

McResult RunAndWriteMonteCarlo(const DistributionDocument& doc,
                               const RunConfig& config, std::ostream& out) {
  const GaussianModel model = ToGaussianModel(doc);
  McOptions options;
  options.steps = config.mc_steps;
  options.seed = config.seed;
  options.execution = config.execution;
  McResult mc = RunMonteCarlo(model, options);

  std::vector<const QuantitySummary*> all{&mc.benefit};
  for (const QuantitySummary& s : mc.shipments.values()) all.push_back(&s);
  json quantities = json::object();
  for (const QuantitySummary* s : all) {
    const std::string file = "mc_hist_" + s->name + ".csv";
    if (!s->samples.empty()) WriteHistogramCsv(config.output_dir / file, s->histogram);
    quantities[s->name] = SummaryJson(*s, config.levels, file);
  }
  json root;
  root["steps"] = mc.steps;
  root["seed"] = mc.seed;
  root["infeasible_count"] = mc.infeasible_count;
  root["confidence_levels"] = ToJson(config.levels);
  root["quantities"] = quantities;
  WriteJson(config.output_dir / "mc_summary.json", root);

  if (mc.benefit.samples.empty()) {
    throw InfeasibleError("every Monte Carlo scenario is infeasible");
  }
  out << "MC mean D = " << FormatNumber(mc.benefit.mean) << " over "
      << mc.benefit.samples.size() << " feasible of " << mc.steps
      << " scenarios\n";
  return mc;
}

json ComparisonJson(const QuantityComparison& c) {
  json q;
  q["fuzzy"] = ToJson(c.fuzzy);
  q["monte_carlo"] = ToJson(c.monte_carlo);
  q["support_width_ratio"] = c.support_width_ratio;
  q["mc_support_within_fuzzy"] = c.mc_support_within_fuzzy;
  return q;
}

int RunCompare(const DistributionDocument& doc, const RunConfig& config,
               std::ostream& out) {
  const FuzzySolution fuzzy = SolveAndWriteFuzzy(doc, config, out);
  const McResult mc = RunAndWriteMonteCarlo(doc, config, out);
  if (!fuzzy.levels.front().feasible || !fuzzy.levels.back().feasible) {
    throw InfeasibleError("fuzzy solution lacks a feasible support or core");
  }
  const ComparisonReport report = Compare(fuzzy, mc, config.levels);
  json quantities = json::object();
  quantities["D"] = ComparisonJson(report.benefit);
  quantities["D"]["mc_mean_in_fuzzy_core"] =
      report.benefit.fuzzy.core().Contains(mc.benefit.mean);
  for (const QuantityComparison& c : report.shipments.values()) {
    quantities[c.name] = ComparisonJson(c);
  }
  json root;
  root["confidence_levels"] = ToJson(config.levels);
  root["alpha_levels"] = config.alpha_levels;
  root["mc_steps"] = config.mc_steps;
  root["seed"] = config.seed;
  root["quantities"] = quantities;
  WriteJson(config.output_dir / "comparison.json", root);
  out << "support width ratio (fuzzy / MC) for D = "
      << FormatNumber(report.benefit.support_width_ratio) << "\n";
  return kExitOk;
}

// --- ingest --------------------------------------------------------------

int RunIngest(const RunConfig& config, std::ostream& out) {
  const bool histogram = config.input.extension() == ".csv";
  EmpiricalCdf cdf = EmpiricalCdf::FromKnots({0.0, 0.0}, {0.0, 1.0});
  double observations = 0.0;
  if (histogram) {
    const BinnedHistogram h = ReadHistogramCsv(config.input);
    observations = h.total();
    cdf = EmpiricalCdf::FromHistogram(h);
  } else {
    const std::vector<double> samples = ReadSamples(config.input);
    observations = static_cast<double>(samples.size());
    cdf = EmpiricalCdf::FromSamples(samples);
  }
  const TrapezoidalFuzzyNumber t = ToTrapezoid(cdf, config.levels);
  json root;
  root["source"] = config.input.filename().string();
  root["format"] = histogram ? "histogram" : "samples";
  root["observations"] = observations;
  root["confidence_levels"] = ToJson(config.levels);
  root["quadruple"] = ToJson(t);
  WriteJson(config.output_dir / "ingest_quadruple.json", root);
  out << "quadruple = (" << FormatNumber(t.a()) << ", " << FormatNumber(t.b())
      << ", " << FormatNumber(t.c()) << ", " << FormatNumber(t.d()) << ")\n";
  return kExitOk;
}

// --- dispatch ------------------------------------------------------------

void Export(const ProblemDocument& doc, const fs::path& target) {
  const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  const json root = std::visit(
      [&](const auto& d) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, DistributionDocument>) {
          return ExportProblem(d, dir);
        } else {
          return ExportProblem(d);
        }
      },
      doc);
  // Full precision: the export must parse back to the same problem.
  WriteText(target, root.dump(2) + "\n");
}

int RunSolver(const ProblemDocument& doc, const RunConfig& config,
              std::ostream& out) {
  if (const auto* t = std::get_if<TransportDocument>(&doc)) {
    if (config.mode != Mode::kCrisp) {
      throw ProblemFormatError(
          "kind: transportation problems support only --mode crisp");
    }
    return RunCrisp(*t, config, out);
  }
  const auto& d = std::get<DistributionDocument>(doc);
  if (config.mode == Mode::kMonteCarlo || config.mode == Mode::kCompare) {
    ToGaussianModel(d);  // fail on unsupported parameters before any output
  }
  switch (config.mode) {
    case Mode::kCrisp:
      return RunCrisp(d, config, out);
    case Mode::kFuzzy:
      SolveAndWriteFuzzy(d, config, out);
      return kExitOk;
    case Mode::kMonteCarlo:
      RunAndWriteMonteCarlo(d, config, out);
      return kExitOk;
    case Mode::kCompare:
      return RunCompare(d, config, out);
    case Mode::kIngest:
      break;
  }
  throw std::logic_error("unreachable mode");
}

}  // namespace

void RunConfig::Validate() const {
  levels.Validate();
  if (alpha_levels < 2) throw std::invalid_argument("--alpha-levels must be >= 2");
  if (mc_steps < 1) throw std::invalid_argument("--mc-steps must be >= 1");
  if (input.empty()) throw std::invalid_argument("an input file is required");
  if (mode == Mode::kIngest && export_problem) {
    throw std::invalid_argument("--export-problem needs a problem file, not ingest mode");
  }
}

std::variant<RunConfig, int> ParseArgs(int argc, const char* const* argv,
                                       std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string mode = "crisp";
  std::string export_path;
  bool serial = false;

  CLI::App app{"Fuzzy and stochastic distributor planning"};
  app.add_option("--mode", mode, "crisp, fuzzy, montecarlo, compare or ingest")
      ->check(CLI::IsMember({"crisp", "fuzzy", "montecarlo", "compare", "ingest"}))
      ->capture_default_str();
  app.add_option("input", config.input,
                 "problem JSON, or a sample/histogram file for ingest")
      ->required();
  app.add_option("--alpha-levels", config.alpha_levels, "number of alpha levels")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  app.add_option("--mc-steps", config.mc_steps, "Monte Carlo scenarios")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--gamma-core", config.levels.core,
                 "confidence level mapped to the trapezoid core")
      ->capture_default_str();
  app.add_option("--gamma-support", config.levels.support,
                 "confidence level mapped to the trapezoid support")
      ->capture_default_str();
  app.add_option("--out", config.output_dir, "output directory")
      ->capture_default_str();
  app.add_option("--export-problem", export_path,
                 "write the parsed problem back out as JSON");
  app.add_flag("--serial", serial, "disable OpenMP parallelism");

  try {
    app.parse(argc, argv);
    config.mode = ModeNames().at(mode);
    if (!export_path.empty()) config.export_problem = export_path;
    if (serial) config.execution = Execution::kSerial;
    config.Validate();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return config;
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<ProblemDocument> doc;
  try {
    config.Validate();
    fs::create_directories(config.output_dir);
    if (config.mode == Mode::kIngest) return RunIngest(config, out);
    doc = ParseProblemFile(config.input);
    if (config.export_problem) Export(*doc, *config.export_problem);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return RunSolver(*doc, config, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ProblemFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
}

int Main(int argc, const char* const* argv) {
  auto parsed = ParseArgs(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return Run(std::get<RunConfig>(parsed), std::cout, std::cerr);
}

}  // namespace fuzzytp::cli
