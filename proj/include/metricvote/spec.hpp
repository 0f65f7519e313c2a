#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metricvote/point.hpp"

namespace metricvote {

/// Aggregation exponent p in [1, inf]. Infinity is a distinct state, never a
/// large float.
class Exponent {
 public:
  static Exponent finite(double p);
  static Exponent infinity() { return Exponent(0.0, true); }
  /// Accepts a decimal number or "inf"/"infinity". Throws ValidationError.
  static Exponent parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_one() const { return !infinite_ && value_ == 1.0; }
  /// Throws std::logic_error when infinite.
  double value() const;
  std::string to_string() const;

  bool operator==(const Exponent&) const = default;

 private:
  Exponent(double value, bool infinite) : value_(value), infinite_(infinite) {}
  double value_;
  bool infinite_;
};

enum class Method { condorcet, lp, reduced_lp };
enum class TieBreak { report_all, lexicographic };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

struct AggregationSpec {
  Method method = Method::lp;
  Exponent p = Exponent::finite(1.0);
  /// Closed-form comparisons and finite-space tie detection (relative).
  double tolerance = 1e-9;
  /// Stopping tolerance for iterative objectives.
  double objective_tolerance = 1e-7;
  std::size_t max_iterations = 100000;
  double reduced_epsilon = 1e-4;
  TieBreak tie_break = TieBreak::report_all;
  std::uint64_t seed = 0;
  std::size_t falsifier_trials = 10000;
  /// Strict (>) or weak (>=) pairwise comparison for Condorcet winners.
  bool strict_condorcet = true;

  /// Throws ValidationError.
  void validate() const;
};

inline constexpr std::size_t kWinnerCap = 10000;

struct Diagnostics {
  std::size_t iterations = 0;
  bool converged = true;
  /// Winner list was capped at kWinnerCap.
  bool truncated = false;
  /// Result comes from a heuristic, not an exact solver.
  bool heuristic = false;
  /// Continuous co-winner interval (line median interval, L_inf ties, ...).
  std::optional<std::pair<double, double>> interval;
  /// Set when no winner is reported, or for one-sided checks.
  std::string reason;
  std::vector<std::string> notes;
};

struct AggregationResult {
  /// Canonically sorted.
  std::vector<Point> winners;
  /// Explicit representative; defaults to the first winner.
  std::optional<Point> representative_point;
  /// Sum of p-powered distances, or max distance for p = inf. Absent for
  /// Condorcet.
  std::optional<double> objective;
  bool unique = false;
  AggregationSpec spec;
  Diagnostics diagnostics;
  /// Condorcet falsifier counterexample.
  std::optional<Point> witness;

  bool has_winner() const { return !winners.empty(); }
  /// Throws std::logic_error when there is no winner.
  const Point& representative() const;
};

/// Sorts and deduplicates, applies the tie-break, and caps at kWinnerCap.
void finalize_winners(AggregationResult& result);

}  // namespace metricvote
