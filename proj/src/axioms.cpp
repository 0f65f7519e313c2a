#include "metricvote/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "metricvote/dispatch.hpp"
#include "metricvote/generate.hpp"
#include "metricvote/line_solver.hpp"
#include "metricvote/metrics.hpp"
#include "metricvote/oracle.hpp"
#include "metricvote/random.hpp"
#include "metricvote/selection.hpp"
#include "metricvote/simplex_solver.hpp"

namespace metricvote {
namespace {

Election make_election(Setting setting, std::vector<std::string> alternatives,
                       std::vector<RawBallot> voters) {
  RawElection raw;
  raw.setting = std::string(to_string(setting));
  if (!alternatives.empty()) raw.alternatives = std::move(alternatives);
  raw.voters = std::move(voters);
  return validate_election(raw);
}

using Strings = std::vector<std::string>;

bool closed_form(const Election& election, const Exponent& p) {
  if (p.is_one() || p.is_infinite()) return election.setting == Setting::line;
  return p.value() == 2.0;
}

bool objective_within(double f, double best, double tol) {
  return f <= best + tol * std::max(1.0, std::abs(best));
}

std::vector<double> weights_of(const Point& p) { return std::get<Simplex>(p).weights; }

double simplex_gap(const Point& a, const Point& b) {
  return simplex_distance(std::get<Simplex>(a), std::get<Simplex>(b));
}

/// Collinear budgets: w lies on the voters' line with at least half of the
/// voters on each side of it.
bool on_median_segment(const Election& election, const Point& w) {
  const auto& x = std::get<Simplex>(w).weights;
  const auto& base = std::get<Simplex>(election.voters.front()).weights;
  std::vector<double> dir(base.size(), 0.0);
  for (const Point& v : election.voters) {
    const auto& y = std::get<Simplex>(v).weights;
    double norm = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) norm += (y[j] - base[j]) * (y[j] - base[j]);
    if (norm > 1e-18) {
      for (std::size_t j = 0; j < y.size(); ++j) dir[j] = (y[j] - base[j]) / std::sqrt(norm);
      break;
    }
  }
  auto coord = [&](const std::vector<double>& y) {
    double t = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) t += (y[j] - base[j]) * dir[j];
    return t;
  };
  const double t = coord(x);
  double off = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double r = x[j] - base[j] - t * dir[j];
    off += r * r;
  }
  if (std::sqrt(off) > 1e-9) return false;
  std::size_t below = 0, above = 0;
  for (const Point& v : election.voters) {
    const double tv = coord(std::get<Simplex>(v).weights);
    below += tv <= t + 1e-12;
    above += tv >= t - 1e-12;
  }
  return 2 * below >= election.n() && 2 * above >= election.n();
}

std::string join_keys(const std::vector<Point>& points, std::size_t limit = 6) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size() && i < limit; ++i) {
    if (i) out += "; ";
    std::string key = canonical_encode(points[i]);
    std::replace(key.begin(), key.end(), kSentenceSeparator, '|');
    out += key.empty() ? "()" : key;
  }
  if (points.size() > limit) out += "; ... " + std::to_string(points.size()) + " total";
  return out + "}";
}

std::optional<Point> majority_point(const Election& election) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;  // key -> (count, first)
  for (std::size_t i = 0; i < election.n(); ++i) {
    auto [it, fresh] = counts.try_emplace(canonical_encode(election.voters[i]), 0, i);
    ++it->second.first;
  }
  std::optional<Point> best;
  std::size_t best_count = 0;
  for (const auto& [key, entry] : counts)
    if (2 * entry.first >= election.n() && entry.first > best_count) {
      best_count = entry.first;
      best = election.voters[entry.second];
    }
  return best;
}

}  // namespace

std::string_view to_string(AxiomStatus status) {
  switch (status) {
    case AxiomStatus::pass: return "pass";
    case AxiomStatus::fail: return "fail";
    case AxiomStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

bool is_co_winner(const Election& election, const AggregationResult& result, const Point& w) {
  const std::string key = canonical_encode(w);
  for (const Point& x : result.winners)
    if (canonical_encode(x) == key) return true;
  if (result.winners.empty()) return false;

  const AggregationSpec& spec = result.spec;
  const double tol = closed_form(election, spec.p) ? spec.tolerance : spec.objective_tolerance;
  switch (election.setting) {
    case Setting::line: {
      const double x = std::get<Real>(w).value;
      const double rep = std::get<Real>(result.representative()).value;
      if (spec.method == Method::condorcet) {
        if (result.diagnostics.interval) {
          const auto [lo, hi] = *result.diagnostics.interval;
          return x >= lo - spec.tolerance && x <= hi + spec.tolerance;
        }
        return std::abs(x - rep) <= spec.tolerance * std::max(1.0, std::abs(rep));
      }
      if (spec.method == Method::reduced_lp)
        return std::abs(x - rep) <= spec.objective_tolerance * std::max(1.0, std::abs(rep));
      const auto view = LineElectionView::from_election(election);
      return objective_within(line_objective(view.values(), x, spec.p), *result.objective, tol);
    }
    case Setting::budget: {
      if (spec.method == Method::condorcet) {
        if (result.diagnostics.interval) return on_median_segment(election, w);
        return simplex_gap(w, result.representative()) <= 1e-9;
      }
      if (spec.method == Method::reduced_lp)
        return simplex_gap(w, result.representative()) <= spec.objective_tolerance;
      const auto instance = SimplexInstance::from_election(election);
      const auto x = weights_of(w);
      const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
      return objective_within(simplex_objective(instance, v, spec.p), *result.objective, tol);
    }
    default:
      break;
  }
  // A capped finite winner list may omit w; fall back to its objective.
  if (result.diagnostics.truncated && spec.method == Method::lp &&
      election.setting != Setting::legislation && result.objective) {
    const MetricDescriptor metric{election.setting, election.ell};
    std::vector<double> d;
    for (const Point& v : election.voters) d.push_back(distance(metric, v, w));
    return nearly_equal(lp_objective(d, spec.p), *result.objective, spec.tolerance);
  }
  return false;
}

AxiomReport check_majoritarian(const Election& election, const AggregationSpec& spec) {
  AxiomReport report;
  report.property = "majoritarian";
  const auto w = majority_point(election);
  if (!w) {
    report.detail = "no point is held by at least half of the voters";
    return report;
  }
  report.target = w;
  const auto result = solve(election, spec);
  report.winners_before = result.winners;
  if (is_co_winner(election, result, *w)) {
    report.status = AxiomStatus::pass;
  } else {
    report.status = AxiomStatus::fail;
    report.counterexample = election;
    report.detail = "majority point " + join_keys({*w}) + " not among winners " +
                    join_keys(result.winners);
  }
  return report;
}

AxiomReport check_monotone(const Election& election, const AggregationSpec& spec,
                           std::size_t voter_index, std::optional<Point> winner) {
  AxiomReport report;
  report.property = "monotone";
  if (voter_index >= election.n()) throw std::invalid_argument("voter index out of range");
  const auto before = solve(election, spec);
  report.winners_before = before.winners;
  if (!before.has_winner()) {
    report.detail = "no winner to move to";
    return report;
  }
  const Point w = winner ? *winner : before.representative();
  if (winner && !is_co_winner(election, before, w)) {
    report.detail = "given point is not a winner";
    return report;
  }
  if (before.diagnostics.reason == "not_falsified") {
    const auto majority = majority_point(election);
    if (!majority || canonical_encode(*majority) != canonical_encode(w)) {
      report.detail = "winner only survived the randomized falsifier";
      return report;
    }
  }
  report.target = w;
  const Election moved = with_voter(election, voter_index, w);
  const auto after = solve(moved, spec);
  report.winners_after = after.winners;
  if (is_co_winner(moved, after, w)) {
    report.status = AxiomStatus::pass;
  } else {
    report.status = AxiomStatus::fail;
    report.counterexample = election;
    report.detail = "voter " + std::to_string(voter_index) + " moved to " + join_keys({w}) +
                    "; new winners " + join_keys(after.winners);
  }
  return report;
}

std::optional<AxiomReport> triangle_monotonicity_search(const Exponent& p, std::uint64_t seed,
                                                        std::size_t attempts) {
  Rng rng(seed);
  AggregationSpec spec;
  spec.p = p;
  const Strings names{"a", "b", "c"};
  for (std::size_t t = 0; t < attempts; ++t) {
    std::vector<RawBallot> voters;
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 3; ++i) {
      pts.push_back(rng.dirichlet(3));
      std::vector<std::pair<std::string, double>> b;
      for (std::size_t a = 0; a < 3; ++a) b.emplace_back(names[a], pts.back()[a]);
      voters.emplace_back(std::move(b));
    }
    if (SimplexInstance(pts).collinear()) continue;
    const Election e = make_election(Setting::budget, names, voters);
    for (std::size_t i = 0; i < 3; ++i) {
      auto report = check_monotone(e, spec, i);
      if (report.status == AxiomStatus::fail) {
        report.detail = "triangle #" + std::to_string(t) + ": " + report.detail;
        return report;
      }
    }
  }
  return std::nullopt;
}

Election ranking_cycle_profile() {
  return make_election(Setting::ranking, {"a", "b", "c"},
                       {Strings{"a", "b", "c"}, Strings{"b", "c", "a"}, Strings{"c", "a", "b"}});
}

Election ranking_monotonicity_profile() {
  return make_election(Setting::ranking, {"a", "b", "c", "d", "e"},
                       {Strings{"a", "b", "c", "d", "e"}, Strings{"e", "a", "b", "c", "d"}});
}

Election ranking_majority_profile() {
  return make_election(Setting::ranking, {"a", "b", "c"},
                       {Strings{"a", "b", "c"}, Strings{"a", "b", "c"}, Strings{"c", "a", "b"}});
}

Election committee_no_condorcet_profile() {
  return make_election(Setting::committee, {"a", "b", "c"},
                       {Strings{}, Strings{}, Strings{"a", "b"}, Strings{"a", "c"}, Strings{"b", "c"}});
}

Election committee_majority_profile() {
  return make_election(Setting::committee, {"a", "b"}, {Strings{"a"}, Strings{"a"}, Strings{"b"}});
}

Election committee_monotonicity_profile() {
  return make_election(Setting::committee, {"a", "b", "c", "d"},
                       {Strings{}, Strings{"a", "b", "c", "d"}});
}

Election line_outlier_profile(std::size_t n) {
  if (n < 2) throw std::invalid_argument("outlier profile needs n >= 2");
  std::vector<RawBallot> voters(n - 1, RawBallot{0.0});
  voters.emplace_back(1.0);
  return make_election(Setting::line, {}, voters);
}

Election budget_majority_profile() {
  using B = std::vector<std::pair<std::string, double>>;
  const B w{{"a", 0.6}, {"b", 0.3}, {"c", 0.1}};
  const B u{{"a", 0.1}, {"b", 0.2}, {"c", 0.7}};
  return make_election(Setting::budget, {"a", "b", "c"}, {w, w, u});
}

namespace {

struct Family {
  Setting setting;
  std::size_t n_lo, n_hi;
  std::size_t m_lo, m_hi;
  bool odd_n = false;
};

Election draw(const Family& f, Rng& rng) {
  InstanceShape shape;
  shape.n = f.n_lo + rng.index(f.n_hi - f.n_lo + 1);
  if (f.odd_n && shape.n % 2 == 0) shape.n = shape.n < f.n_hi ? shape.n + 1 : shape.n - 1;
  shape.m = f.m_lo + rng.index(f.m_hi - f.m_lo + 1);
  shape.max_document = 3;
  return random_election(f.setting, shape, rng);
}

AggregationSpec lp_spec(Exponent p, Method method = Method::lp) {
  AggregationSpec spec;
  spec.method = method;
  spec.p = p;
  return spec;
}

AggregationSpec condorcet_spec(bool strict) {
  AggregationSpec spec;
  spec.method = Method::condorcet;
  spec.strict_condorcet = strict;
  spec.falsifier_trials = 400;
  return spec;
}

std::vector<AggregationSpec> beyond_one() {
  return {lp_spec(Exponent::finite(2.0)), lp_spec(Exponent::finite(3.0)),
          lp_spec(Exponent::infinity())};
}

std::string label(const AggregationSpec& spec) {
  if (spec.method == Method::condorcet) return spec.strict_condorcet ? "strict" : "weak";
  return std::string(spec.method == Method::reduced_lp ? "reduced " : "") + "p=" +
         spec.p.to_string();
}

Election documents(std::vector<Strings> docs) {
  std::vector<RawBallot> voters(docs.begin(), docs.end());
  return make_election(Setting::legislation, {}, std::move(voters));
}

class Suite {
 public:
  Suite(std::uint64_t seed, std::size_t trials) : seed_(seed), trials_(trials) {
    report.cells.reserve(64);
  }

  Table1Report report;

  Rng next_rng() { return Rng(seed_ + 0x9E3779B97F4A7C15ULL * ++cells_); }
  std::size_t trials() const { return trials_; }

  Table1Cell& open(std::string setting, std::string method, std::string property,
                   std::string claimed) {
    Table1Cell cell;
    cell.setting = std::move(setting);
    cell.method = std::move(method);
    cell.property = std::move(property);
    cell.claimed = std::move(claimed);
    report.cells.push_back(std::move(cell));
    return report.cells.back();
  }

  static void note_violation(Table1Cell& cell, const std::string& what) {
    ++cell.violations;
    if (cell.evidence.size() < 3) cell.evidence.push_back("violation: " + what);
  }

  /// Planted-majority instances; every spec must return the majority point.
  void majoritarian_trials(Table1Cell& cell, const Family& family,
                           const std::vector<AggregationSpec>& specs) {
    Rng rng = next_rng();
    for (std::size_t t = 0; t < trials_; ++t) {
      const Election e = plant_majority(draw(family, rng), rng.index(2), rng);
      for (const auto& spec : specs) {
        const auto r = check_majoritarian(e, spec);
        ++cell.trials;
        if (r.status != AxiomStatus::pass) note_violation(cell, label(spec) + ": " + r.detail);
      }
    }
  }

  /// Random winners and voters; half of the instances carry a planted
  /// majority so that Condorcet winners exist.
  void monotone_trials(Table1Cell& cell, const Family& family,
                       const std::vector<AggregationSpec>& specs) {
    Rng rng = next_rng();
    std::size_t done = 0;
    for (std::size_t attempt = 0; done < trials_ * specs.size() && attempt < 50 * trials_ * specs.size();
         ++attempt) {
      Election e = draw(family, rng);
      if (rng.coin()) e = plant_majority(e, 0, rng);
      const auto& spec = specs[done % specs.size()];
      const auto result = solve(e, spec);
      if (!result.has_winner()) continue;
      const Point w = result.winners[rng.index(result.winners.size())];
      const auto r = check_monotone(e, spec, rng.index(e.n()), w);
      if (r.status == AxiomStatus::not_applicable) continue;
      ++done;
      ++cell.trials;
      if (r.status == AxiomStatus::fail) note_violation(cell, label(spec) + ": " + r.detail);
    }
  }

  template <class Predicate>
  void property_trials(Table1Cell& cell, const Family& family,
                       const std::vector<AggregationSpec>& specs, std::size_t count,
                       Predicate&& holds) {
    Rng rng = next_rng();
    for (std::size_t t = 0; t < count; ++t) {
      const Election e = draw(family, rng);
      for (const auto& spec : specs) {
        ++cell.trials;
        std::string why;
        if (!holds(e, spec, why)) note_violation(cell, label(spec) + ": " + why);
      }
    }
  }

  static void finish_yes(Table1Cell& cell) {
    cell.reproduced = cell.violations == 0;
    cell.observed = cell.reproduced ? "yes" : "no";
  }

  /// Each spec must fail on the example.
  static bool majoritarian_counterexample(Table1Cell& cell, const Election& e,
                                          const std::vector<AggregationSpec>& specs,
                                          const std::string& name) {
    bool all = true;
    for (const auto& spec : specs) {
      const auto r = check_majoritarian(e, spec);
      const bool failed = r.status == AxiomStatus::fail;
      all = all && failed;
      cell.evidence.push_back(name + ", " + label(spec) + ": " +
                              (failed ? "fails, " + r.detail : "holds"));
    }
    return all;
  }

  /// For each spec, tries the example (given winner or each winner, every
  /// voter), then a seeded search over `family` if the example holds.
  bool monotone_counterexample(Table1Cell& cell, const Election& e, std::optional<Point> winner,
                               const std::vector<AggregationSpec>& specs, const std::string& name,
                               std::optional<Family> family) {
    bool all = true;
    for (const auto& spec : specs) {
      std::optional<AxiomReport> found;
      std::vector<Point> targets;
      if (winner) targets.push_back(*winner);
      else {
        const auto result = solve(e, spec);
        targets.assign(result.winners.begin(),
                       result.winners.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(8, result.winners.size())));
      }
      for (const Point& w : targets) {
        for (std::size_t i = 0; i < e.n() && !found; ++i) {
          auto r = check_monotone(e, spec, i, w);
          if (r.status == AxiomStatus::fail) found = std::move(r);
        }
        if (found) break;
      }
      if (found) {
        cell.evidence.push_back(name + ", " + label(spec) + ": fails, " + found->detail);
        continue;
      }
      if (family) {
        Rng rng = next_rng();
        for (std::size_t t = 0; t < trials_ && !found; ++t) {
          const Election r = draw(*family, rng);
          const auto result = solve(r, spec);
          if (!result.has_winner()) continue;
          auto check = check_monotone(r, spec, rng.index(r.n()),
                                      result.winners[rng.index(result.winners.size())]);
          if (check.status == AxiomStatus::fail) found = std::move(check);
        }
        if (found) {
          cell.evidence.push_back(name + " holds at " + label(spec) + "; seeded search fails: " +
                                  found->detail);
          continue;
        }
      }
      all = false;
      cell.evidence.push_back(name + ", " + label(spec) + ": no counterexample");
    }
    return all;
  }

  static bool no_strict_winner(Table1Cell& cell, const Election& e, const std::string& name) {
    const auto strict = solve(e, condorcet_spec(true));
    const auto weak = solve(e, condorcet_spec(false));
    cell.evidence.push_back(name + ": strict winners " + join_keys(strict.winners) +
                            ", weak winners " + join_keys(weak.winners) +
                            (strict.diagnostics.reason.empty() ? "" : ", reason " + strict.diagnostics.reason));
    return !strict.has_winner();
  }

  static bool tied(Table1Cell& cell, const Election& e, const AggregationSpec& spec,
                   const std::string& name) {
    const auto r = solve(e, spec);
    const bool multiple = r.winners.size() > 1 || (r.has_winner() && !r.unique);
    cell.evidence.push_back(name + ", " + label(spec) + ": winners " + join_keys(r.winners) +
                            (r.diagnostics.interval ? ", interval [" + std::to_string(r.diagnostics.interval->first) +
                                                          ", " + std::to_string(r.diagnostics.interval->second) + "]"
                                                    : ""));
    return multiple;
  }

 private:
  std::uint64_t seed_;
  std::size_t trials_;
  std::uint64_t cells_ = 0;
};

void finish_no(Table1Cell& cell, bool reproduced, const std::string& observed) {
  cell.reproduced = reproduced;
  cell.observed = reproduced ? observed : "not reproduced";
}

/// Yes-trials at p = 1 and a fixed counterexample beyond.
void finish_only_p1(Table1Cell& cell, bool counterexample) {
  cell.reproduced = cell.violations == 0 && counterexample;
  cell.observed = std::string(cell.violations == 0 ? "holds at p=1" : "fails at p=1") + ", " +
                  (counterexample ? "fails for p=2,3,inf" : "holds somewhere beyond p=1");
}

bool has_winner_check(const Election& e, const AggregationSpec& spec, std::string& why) {
  const auto r = solve(e, spec);
  if (!r.has_winner()) why = "no winner";
  return r.has_winner();
}

bool unique_check(const Election& e, const AggregationSpec& spec, std::string& why) {
  const auto r = solve(e, spec);
  const bool ok = r.unique && r.winners.size() == 1;
  if (!ok) why = "winners " + join_keys(r.winners);
  return ok;
}

const std::string kCondorcet = "Condorcet";
const std::string kLp = "reduced L_p";

void plurality_row(Suite& s) {
  const Family fam{Setting::plurality, 1, 15, 1, 6};
  const Election tie = make_election(Setting::plurality, {"a", "b"}, {std::string("a"), std::string("b")});
  const auto weak = std::vector{condorcet_spec(false)};
  std::vector<AggregationSpec> reduced;
  for (auto p : {Exponent::finite(1.0), Exponent::finite(2.0), Exponent::finite(3.0), Exponent::infinity()})
    reduced.push_back(lp_spec(p, Method::reduced_lp));

  auto& c1 = s.open("Plurality", kCondorcet, "unique", "no");
  finish_no(c1, Suite::tied(c1, tie, weak[0], "(a, b)"), "no");
  auto& c2 = s.open("Plurality", kCondorcet, "majoritarian", "yes");
  s.majoritarian_trials(c2, fam, weak);
  Suite::finish_yes(c2);
  auto& c3 = s.open("Plurality", kCondorcet, "monotone", "yes");
  s.monotone_trials(c3, fam, weak);
  Suite::finish_yes(c3);
  auto& c4 = s.open("Plurality", kLp, "unique", "no");
  finish_no(c4, Suite::tied(c4, tie, reduced[0], "(a, b)"), "no");
  auto& c5 = s.open("Plurality", kLp, "majoritarian", "yes");
  s.majoritarian_trials(c5, fam, reduced);
  Suite::finish_yes(c5);
  auto& c6 = s.open("Plurality", kLp, "monotone", "yes");
  s.monotone_trials(c6, fam, reduced);
  Suite::finish_yes(c6);
}

void line_row(Suite& s) {
  const Family fam{Setting::line, 1, 25, 0, 0};
  Family odd = fam;
  odd.odd_n = true;
  const auto weak = std::vector{condorcet_spec(false)};
  const auto l1 = std::vector{lp_spec(Exponent::finite(1.0))};

  auto& c1 = s.open("1D single winner", kCondorcet, "unique", "for odd n");
  s.property_trials(c1, odd, {condorcet_spec(true)}, s.trials(), unique_check);
  const bool even_tie = Suite::tied(c1, make_election(Setting::line, {}, {0.0, 1.0}), weak[0], "(0, 1)");
  c1.reproduced = c1.violations == 0 && even_tie;
  c1.observed = c1.reproduced ? "unique for odd n, interval for even n" : "not reproduced";

  auto& c2 = s.open("1D single winner", kCondorcet, "majoritarian", "yes");
  s.majoritarian_trials(c2, fam, weak);
  Suite::finish_yes(c2);
  auto& c3 = s.open("1D single winner", kCondorcet, "monotone", "yes");
  s.monotone_trials(c3, fam, weak);
  Suite::finish_yes(c3);

  auto& c4 = s.open("1D single winner", kLp, "unique", "yes");
  std::vector<AggregationSpec> reduced;
  for (auto p : {Exponent::finite(1.0), Exponent::finite(1.5), Exponent::finite(2.0), Exponent::infinity()})
    reduced.push_back(lp_spec(p, Method::reduced_lp));
  s.property_trials(c4, fam, reduced, s.trials(), unique_check);
  Suite::finish_yes(c4);

  const Election outlier = line_outlier_profile(101);
  auto& c5 = s.open("1D single winner", kLp, "majoritarian", "only for p = 1");
  s.majoritarian_trials(c5, fam, l1);
  finish_only_p1(c5, Suite::majoritarian_counterexample(c5, outlier, beyond_one(), "100 x 0, 1 x 1"));

  auto& c6 = s.open("1D single winner", kLp, "monotone", "only for p = 1");
  s.monotone_trials(c6, fam, l1);
  finish_only_p1(c6, s.monotone_counterexample(c6, outlier, std::nullopt, beyond_one(),
                                               "100 x 0, 1 x 1", fam));
}

void budget_row(Suite& s) {
  const Family fam{Setting::budget, 1, 12, 2, 4};
  using B = std::vector<std::pair<std::string, double>>;
  const auto weak = std::vector{condorcet_spec(false)};
  const Election vertices = make_election(Setting::budget, {"a", "b", "c"},
                                          {B{{"a", 1.0}}, B{{"b", 1.0}}, B{{"c", 1.0}}});
  const Election pair = make_election(Setting::budget, {"a", "b", "c"},
                                      {B{{"a", 1.0}}, B{{"b", 0.5}, {"c", 0.5}}});

  auto& c1 = s.open("Continuous budgeting", kCondorcet, "existence", "no");
  finish_no(c1, Suite::no_strict_winner(c1, vertices, "three vertices"), "no");
  auto& c2 = s.open("Continuous budgeting", kCondorcet, "unique", "no");
  finish_no(c2, Suite::tied(c2, pair, weak[0], "two voters"), "no");
  auto& c3 = s.open("Continuous budgeting", kCondorcet, "majoritarian", "yes");
  s.majoritarian_trials(c3, fam, weak);
  Suite::finish_yes(c3);
  auto& c4 = s.open("Continuous budgeting", kCondorcet, "monotone", "yes");
  s.monotone_trials(c4, fam, weak);
  Suite::finish_yes(c4);

  std::vector<AggregationSpec> reduced;
  for (auto p : {Exponent::finite(1.0), Exponent::finite(2.0), Exponent::finite(3.0), Exponent::infinity()})
    reduced.push_back(lp_spec(p, Method::reduced_lp));
  auto& c5 = s.open("Continuous budgeting", kLp, "existence", "yes");
  s.property_trials(c5, fam, reduced, s.trials(), has_winner_check);
  Suite::finish_yes(c5);
  auto& c6 = s.open("Continuous budgeting", kLp, "unique", "yes");
  s.property_trials(c6, fam, reduced, s.trials(), unique_check);
  Suite::finish_yes(c6);

  auto& c7 = s.open("Continuous budgeting", kLp, "majoritarian", "only for p = 1");
  s.majoritarian_trials(c7, fam, {lp_spec(Exponent::finite(1.0))});
  finish_only_p1(c7, Suite::majoritarian_counterexample(c7, budget_majority_profile(), beyond_one(),
                                                        "(w, w, u)"));

  auto& c8 = s.open("Continuous budgeting", kLp, "monotone", "no");
  bool all = true;
  for (const auto& spec : beyond_one()) {
    const auto found = triangle_monotonicity_search(spec.p, s.next_rng().bits(), s.trials());
    all = all && found.has_value();
    c8.evidence.push_back("triangle search, " + label(spec) + ": " +
                          (found ? "fails, " + found->detail : std::string("no counterexample")));
  }
  finish_no(c8, all, "no for p=2,3,inf");
  const auto at_one = triangle_monotonicity_search(Exponent::finite(1.0), s.next_rng().bits(), s.trials());
  s.report.discrepancies.push_back(
      "Continuous budgeting / " + kLp + " / monotone at p=1: " +
      (at_one ? "counterexample " + at_one->detail
              : "no counterexample in " + std::to_string(s.trials()) +
                    " triangles; L_1 co-winner sets are monotone in every metric space by the "
                    "triangle inequality, so the claim is reproduced for p > 1 only"));
}

void ranking_row(Suite& s) {
  const Family fam{Setting::ranking, 1, 7, 2, 4};
  const Family l1_fam{Setting::ranking, 1, 7, 2, 5};
  const Family search{Setting::ranking, 2, 5, 3, 4};
  const auto weak = std::vector{condorcet_spec(false)};
  const auto l1 = std::vector{lp_spec(Exponent::finite(1.0))};

  auto& c1 = s.open("Social welfare", kCondorcet, "existence", "no");
  finish_no(c1, Suite::no_strict_winner(c1, ranking_cycle_profile(), "cycle"), "no");
  auto& c2 = s.open("Social welfare", kCondorcet, "unique", "no");
  const Election two = make_election(Setting::ranking, {"a", "b", "c"},
                                     {Strings{"a", "b", "c"}, Strings{"b", "a", "c"}});
  finish_no(c2, Suite::tied(c2, two, weak[0], "(abc, bac)"), "no");
  auto& c3 = s.open("Social welfare", kCondorcet, "majoritarian", "yes");
  s.majoritarian_trials(c3, fam, weak);
  Suite::finish_yes(c3);
  auto& c4 = s.open("Social welfare", kCondorcet, "monotone", "yes");
  s.monotone_trials(c4, fam, weak);
  Suite::finish_yes(c4);

  auto& c5 = s.open("Social welfare", kLp, "existence", "yes");
  s.property_trials(c5, fam,
                    {lp_spec(Exponent::finite(1.0), Method::reduced_lp),
                     lp_spec(Exponent::finite(2.0), Method::reduced_lp),
                     lp_spec(Exponent::infinity(), Method::reduced_lp)},
                    s.trials(), has_winner_check);
  Suite::finish_yes(c5);
  auto& c6 = s.open("Social welfare", kLp, "unique", "no");
  finish_no(c6, Suite::tied(c6, ranking_cycle_profile(), lp_spec(Exponent::finite(1.0), Method::reduced_lp),
                            "cycle"),
            "no");

  auto& c7 = s.open("Social welfare", kLp, "majoritarian", "only for p = 1");
  s.majoritarian_trials(c7, l1_fam, l1);
  finish_only_p1(c7, Suite::majoritarian_counterexample(c7, ranking_majority_profile(), beyond_one(),
                                                        "(abc, abc, cab)"));

  auto& c8 = s.open("Social welfare", kLp, "monotone", "only for p = 1");
  s.monotone_trials(c8, l1_fam, l1);
  const Point w = Permutation{{"a", "b", "e", "c", "d"}};
  finish_only_p1(c8, s.monotone_counterexample(c8, ranking_monotonicity_profile(), w, beyond_one(),
                                               "(abcde, eabcd) with w = abecd", search));

  // The example as stated at p = 1.
  const auto full = check_monotone(ranking_monotonicity_profile(), l1[0], 1, w);
  const auto reduced = check_monotone(ranking_monotonicity_profile(),
                                      lp_spec(Exponent::finite(1.0), Method::reduced_lp), 1, w);
  s.report.discrepancies.push_back(
      "Social welfare / (abcde, eabcd) moving the second voter to abecd: L_1 " +
      std::string(to_string(full.status)) + " (new winners " + join_keys(full.winners_after) +
      "), reduced L_1 " + std::string(to_string(reduced.status)) + " (new winners " +
      join_keys(reduced.winners_after) +
      "); the full L_1 co-winner set keeps abecd, so the p=1 cell is checked on full L_1 sets");
}

void committee_row(Suite& s) {
  const Family fam{Setting::committee, 1, 9, 1, 4};
  Family odd{Setting::committee, 1, 9, 1, 6};
  odd.odd_n = true;
  const auto weak = std::vector{condorcet_spec(false)};
  const auto l1 = std::vector{lp_spec(Exponent::finite(1.0))};
  const Election ab = make_election(Setting::committee, {"a", "b"}, {Strings{"a"}, Strings{"b"}});

  auto& c1 = s.open("Committee", kCondorcet, "existence", "no");
  finish_no(c1, Suite::no_strict_winner(c1, committee_no_condorcet_profile(), "five voters"), "no");
  auto& c2 = s.open("Committee", kCondorcet, "unique", "no");
  finish_no(c2, Suite::tied(c2, ab, weak[0], "({a}, {b})"), "no");
  auto& c3 = s.open("Committee", kCondorcet, "majoritarian", "yes");
  s.majoritarian_trials(c3, fam, weak);
  Suite::finish_yes(c3);
  auto& c4 = s.open("Committee", kCondorcet, "monotone", "yes");
  s.monotone_trials(c4, fam, weak);
  Suite::finish_yes(c4);

  auto& c5 = s.open("Committee", kLp, "existence", "yes");
  s.property_trials(c5, fam,
                    {lp_spec(Exponent::finite(1.0), Method::reduced_lp),
                     lp_spec(Exponent::finite(2.0), Method::reduced_lp),
                     lp_spec(Exponent::infinity(), Method::reduced_lp)},
                    s.trials(), has_winner_check);
  Suite::finish_yes(c5);

  auto& c6 = s.open("Committee", kLp, "unique", "for p = 1 and odd n");
  s.property_trials(c6, odd, l1, std::max<std::size_t>(s.trials(), 500),
                    [](const Election& e, const AggregationSpec& spec, std::string& why) {
                      const auto oracle = brute_force_lp(e, enumerate_space(e), spec);
                      if (oracle.winners.size() != 1) why = "oracle winners " + join_keys(oracle.winners);
                      return oracle.winners.size() == 1;
                    });
  const bool even_tie = Suite::tied(c6, ab, l1[0], "({a}, {b})");
  c6.reproduced = c6.violations == 0 && even_tie;
  c6.observed = c6.reproduced ? "unique for odd n, ties for even n" : "not reproduced";

  auto& c7 = s.open("Committee", kLp, "majoritarian", "only for p = 1");
  s.majoritarian_trials(c7, fam, l1);
  finish_only_p1(c7, Suite::majoritarian_counterexample(c7, committee_majority_profile(), beyond_one(),
                                                        "({a}, {a}, {b})"));

  auto& c8 = s.open("Committee", kLp, "monotone", "only for p = 1");
  s.monotone_trials(c8, fam, l1);
  finish_only_p1(c8, s.monotone_counterexample(c8, committee_monotonicity_profile(),
                                               Point{make_subset({"a", "b"})}, beyond_one(),
                                               "({}, {a,b,c,d}) with w = {a,b}", fam));
}

void legislation_row(Suite& s) {
  const Family fam{Setting::legislation, 1, 6, 1, 3};
  const auto weak = std::vector{condorcet_spec(false)};
  const auto l1 = std::vector{lp_spec(Exponent::finite(1.0))};
  const Election split = documents({{"s1"}, {"s2"}});

  auto& c1 = s.open("Legislation", kCondorcet, "existence", "no");
  finish_no(c1, Suite::no_strict_winner(c1, documents({{"a", "b", "c"}, {"b", "c", "a"}, {"c", "a", "b"}}),
                                        "cyclic documents"),
            "no");
  auto& c2 = s.open("Legislation", kCondorcet, "unique", "no");
  finish_no(c2, Suite::tied(c2, split, weak[0], "([s1], [s2])"), "no");
  auto& c3 = s.open("Legislation", kCondorcet, "majoritarian", "yes");
  s.majoritarian_trials(c3, fam, weak);
  Suite::finish_yes(c3);
  auto& c4 = s.open("Legislation", kCondorcet, "monotone", "yes");
  s.monotone_trials(c4, fam, weak);
  Suite::finish_yes(c4);

  auto& c5 = s.open("Legislation", kLp, "existence", "yes");
  s.property_trials(c5, fam,
                    {lp_spec(Exponent::finite(1.0)), lp_spec(Exponent::finite(2.0)),
                     lp_spec(Exponent::infinity())},
                    s.trials(), has_winner_check);
  Suite::finish_yes(c5);
  auto& c6 = s.open("Legislation", kLp, "unique", "no");
  finish_no(c6, Suite::tied(c6, split, l1[0], "([s1], [s2])"), "no");

  auto& c7 = s.open("Legislation", kLp, "majoritarian", "only for p = 1");
  s.majoritarian_trials(c7, fam, l1);
  finish_only_p1(c7, Suite::majoritarian_counterexample(c7, documents({{"a"}, {"a"}, {"b"}}), beyond_one(),
                                                        "([a], [a], [b])"));

  auto& c8 = s.open("Legislation", kLp, "monotone", "only for p = 1");
  s.monotone_trials(c8, fam, l1);
  finish_only_p1(c8, s.monotone_counterexample(c8, documents({{}, {"a", "b", "c", "d"}}),
                                               Point{Document{{"a", "b"}}}, beyond_one(),
                                               "([], [a,b,c,d]) with w = [a,b]", fam));
}

}  // namespace

Table1Report run_table1_suite(std::uint64_t seed, std::size_t trials) {
  Suite suite(seed, trials);
  plurality_row(suite);
  line_row(suite);
  budget_row(suite);
  ranking_row(suite);
  committee_row(suite);
  legislation_row(suite);

  // Reduced L_1 on the line for even n, where it picks one point inside the
  // median interval.
  const Election pair = make_election(Setting::line, {}, {0.0, 1.0});
  const auto r = check_monotone(pair, lp_spec(Exponent::finite(1.0), Method::reduced_lp), 0);
  suite.report.discrepancies.push_back(
      "1D single winner / reduced L_1 on (0, 1) moving a voter to its winner: " +
      std::string(to_string(r.status)) + " (" + r.detail +
      "); the p=1 cells are checked on the full median interval");
  return std::move(suite.report);
}

bool Table1Report::all_reproduced() const {
  return std::all_of(cells.begin(), cells.end(), [](const Table1Cell& c) { return c.reproduced; });
}

std::string Table1Report::to_text() const {
  std::string out;
  for (const auto& c : cells) {
    out += (c.reproduced ? "REPRODUCED " : "MISMATCH   ") + c.setting + " / " + c.method + " / " +
           c.property + ": claimed " + c.claimed + ", observed " + c.observed;
    if (c.trials) {
      out += " (" + std::to_string(c.violations) + " violations in " + std::to_string(c.trials) +
             " trials)";
    }
    out += "\n";
    for (const auto& e : c.evidence) out += "    " + e + "\n";
  }
  for (const auto& d : discrepancies) out += "NOTE " + d + "\n";
  return out;
}

}  // namespace metricvote
