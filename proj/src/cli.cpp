#include "metricvote/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "metricvote/axioms.hpp"
#include "metricvote/dispatch.hpp"
#include "metricvote/error.hpp"
#include "metricvote/json_io.hpp"
#include "metricvote/line_solver.hpp"
#include "metricvote/metrics.hpp"
#include "metricvote/oracle.hpp"
#include "metricvote/simplex_solver.hpp"

namespace metricvote {
namespace {

struct SpecFlags {
  std::string method = "lp";
  std::string p = "1";
  std::string tie_break = "report-all";
  double tolerance = 1e-9;
  std::size_t max_iterations = 100000;
  std::uint64_t seed = 0;
  bool strict_condorcet = true;

  void attach(CLI::App* cmd) {
    cmd->add_option("--method", method, "condorcet | lp | reduced-lp")->required();
    cmd->add_option("--p", p, "exponent, a number >= 1 or inf");
    cmd->add_option("--tie-break", tie_break, "report-all | lex");
    cmd->add_option("--tolerance", tolerance);
    cmd->add_option("--max-iter", max_iterations);
    cmd->add_option("--seed", seed);
    cmd->add_option("--strict-condorcet", strict_condorcet);
  }

  AggregationSpec build() const {
    AggregationSpec spec;
    const auto m = parse_method(method);
    if (!m) throw ValidationError("unknown method '" + method + "'");
    spec.method = *m;
    spec.p = Exponent::parse(p);
    if (tie_break == "lex" || tie_break == "lexicographic") spec.tie_break = TieBreak::lexicographic;
    else if (tie_break != "report-all") throw ValidationError("unknown tie-break '" + tie_break + "'");
    spec.tolerance = tolerance;
    spec.max_iterations = max_iterations;
    spec.seed = seed;
    spec.strict_condorcet = strict_condorcet;
    spec.validate();
    return spec;
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot write " + path);
  file << text;
}

std::string fixed(double v, const char* format = "%.12f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::vector<double> parse_grid(const std::string& text) {
  double start = 0, stop = 0, step = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &tail) != 3 || step <= 0.0 ||
      stop < start)
    throw ValidationError("p-grid must be start:stop:step with step > 0");
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i)
    grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e9) / 1e9);
  return grid;
}

std::set<std::string> keys_of(const AggregationResult& r) {
  std::set<std::string> keys;
  for (const Point& w : r.winners) keys.insert(canonical_encode(w));
  return keys;
}

/// Solver against the reference implementation for the setting.
int verify(const Election& election, const AggregationSpec& spec, std::ostream& out) {
  const auto solved = solve(election, spec);
  Json doc;
  doc["solver"] = result_to_json(solved);
  bool match = false;
  if (is_finite_setting(election.setting)) {
    const FiniteSpace space = enumerate_space(election);
    const auto oracle = spec.method == Method::condorcet
                            ? brute_force_condorcet(election, space, spec.strict_condorcet, spec)
                            : brute_force_lp(election, space, spec);
    doc["oracle"] = result_to_json(oracle);
    match = keys_of(solved) == keys_of(oracle);
  } else if (spec.method == Method::condorcet) {
    throw ValidationError("no Condorcet oracle for continuous settings");
  } else if (election.setting == Setting::line) {
    const auto view = LineElectionView::from_election(election);
    const double grid = line_grid_minimum(view.values(), spec.p);
    doc["oracle"] = Json{{"grid_minimum", grid}};
    match = solved.objective && *solved.objective <= grid + 1e-9 * std::max(1.0, grid);
  } else {
    if (!spec.p.is_one()) throw ValidationError("budget oracle covers p = 1 only");
    const auto instance = SimplexInstance::from_election(election);
    std::vector<std::vector<double>> pts;
    for (const Point& v : election.voters) pts.push_back(std::get<Simplex>(v).weights);
    const auto oracle = subgradient_geometric_median(pts, 5, spec.seed);
    doc["oracle"] = Json{{"subgradient_objective", oracle.objective}};
    match = solved.objective && *solved.objective <= oracle.objective + 1e-6;
  }
  doc["match"] = match;
  out << doc.dump(2) << "\n";
  return match ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric-space vote aggregation"};
  app.require_subcommand(1);

  std::string input, output;
  SpecFlags flags;
  auto* aggregate = app.add_subcommand("aggregate", "solve an election file");
  aggregate->add_option("--input", input)->required();
  aggregate->add_option("--output", output);
  flags.attach(aggregate);

  auto* verify_cmd = app.add_subcommand("verify", "compare the solver with the brute-force oracle");
  verify_cmd->add_option("--input", input)->required();
  flags.attach(verify_cmd);

  std::string suite = "table1";
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  auto* axioms = app.add_subcommand("axioms", "replay the axiom table");
  axioms->add_option("--suite", suite);
  axioms->add_option("--trials", trials);
  axioms->add_option("--seed", seed);
  axioms->add_option("--output", output);

  std::string setting_name, x_text, y_text;
  std::optional<std::size_t> ell;
  auto* dist = app.add_subcommand("distance", "distance between two points");
  dist->add_option("--setting", setting_name)->required();
  dist->add_option("--x", x_text)->required();
  dist->add_option("--y", y_text)->required();
  dist->add_option("--ell", ell);

  std::size_t n = 101;
  std::string grid_text = "1.1:8:0.1";
  auto* figure = app.add_subcommand("figure1", "outlier influence curves as CSV");
  figure->add_option("--n", n);
  figure->add_option("--p-grid", grid_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (aggregate->parsed()) {
      const Election election = load_election(input);
      const auto result = solve(election, flags.build());
      emit(result_to_json(result).dump(2) + "\n", output, out);
      return kExitOk;
    }
    if (verify_cmd->parsed()) return verify(load_election(input), flags.build(), out);
    if (axioms->parsed()) {
      if (suite != "table1") throw ValidationError("unknown suite '" + suite + "'");
      const auto report = run_table1_suite(seed, trials);
      out << report.to_text();
      if (!output.empty()) emit(table1_to_json(report).dump(2) + "\n", output, out);
      return report.all_reproduced() ? kExitOk : kExitFailure;
    }
    if (dist->parsed()) {
      const auto setting = parse_setting(setting_name);
      if (!setting) throw ValidationError("unknown setting '" + setting_name + "'");
      Json xj, yj;
      try {
        xj = Json::parse(x_text);
        yj = Json::parse(y_text);
      } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("point is not valid JSON: ") + e.what());
      }
      const Point x = point_from_json(*setting, xj);
      const Point y = point_from_json(*setting, yj);
      MetricDescriptor metric{*setting, ell};
      if (*setting == Setting::legislation && !ell)
        metric.ell = std::max<std::size_t>(
            1, std::max(std::get<Document>(x).sentences.size(), std::get<Document>(y).sentences.size()));
      out << fixed(distance(metric, x, y), "%.17g") << "\n";
      return kExitOk;
    }
    if (figure->parsed()) {
      if (n % 2 == 0 || n < 3) throw ValidationError("--n must be odd and at least 3");
      out << "p,consensus_outlier,polarized\n";
      for (double p : parse_grid(grid_text)) {
        if (p <= 1.0) throw ValidationError("p-grid values must exceed 1");
        out << fixed(p, "%.6g") << "," << fixed(figure1_curve(n, p, Figure1Distribution::consensus_outlier))
            << "," << fixed(figure1_curve(n, p, Figure1Distribution::polarized)) << "\n";
      }
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace metricvote
