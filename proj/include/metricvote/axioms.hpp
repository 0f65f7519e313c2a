#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metricvote/election.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

enum class AxiomStatus { pass, fail, not_applicable };
std::string_view to_string(AxiomStatus status);

struct AxiomReport {
  std::string property;
  AxiomStatus status = AxiomStatus::not_applicable;
  /// The election the property failed on (before any voter moved).
  std::optional<Election> counterexample;
  /// The majority point or the winner that was moved to.
  std::optional<Point> target;
  std::vector<Point> winners_before;
  std::vector<Point> winners_after;
  std::string detail;
};

/// Whether `w` belongs to the winner set described by `result`. Finite
/// settings compare canonical keys; continuous L_p compares objectives,
/// continuous reduced L_p compares with the representative, and line
/// Condorcet checks the weak-winner interval.
bool is_co_winner(const Election& election, const AggregationResult& result, const Point& w);

/// Not applicable unless some point is held by at least n/2 voters.
AxiomReport check_majoritarian(const Election& election, const AggregationSpec& spec);

/// Moves voter `voter_index` onto `winner` (default: the representative
/// winner) and checks that it stays a co-winner. Not applicable when there
/// is no winner, `winner` is not one, or the winner is an uncertified
/// budget Condorcet candidate (no point held by half of the voters).
AxiomReport check_monotone(const Election& election, const AggregationSpec& spec,
                           std::size_t voter_index, std::optional<Point> winner = std::nullopt);

/// Random three-voter budgets on the 2-simplex: the first instance where
/// moving a voter onto the L_p winner moves the winner.
std::optional<AxiomReport> triangle_monotonicity_search(const Exponent& p, std::uint64_t seed,
                                                        std::size_t attempts);

// Small profiles behind the known counterexamples.
Election ranking_cycle_profile();                  // abc, bca, cab
Election ranking_monotonicity_profile();           // abcde, eabcd
Election ranking_majority_profile();               // abc, abc, cab
Election committee_no_condorcet_profile();         // {}, {}, ab, ac, bc
Election committee_majority_profile();             // a, a, b
Election committee_monotonicity_profile();         // {}, abcd
Election line_outlier_profile(std::size_t n);      // n-1 voters at 0, one at 1
Election budget_majority_profile();                // w, w, u

struct Table1Cell {
  std::string setting;
  std::string method;
  std::string property;
  std::string claimed;
  std::string observed;
  /// Random instances checked ("yes" cells).
  std::size_t trials = 0;
  std::size_t violations = 0;
  bool reproduced = false;
  std::vector<std::string> evidence;
};

struct Table1Report {
  std::vector<Table1Cell> cells;
  /// Places where the observed behaviour departs from a claim as literally
  /// stated, with the reason.
  std::vector<std::string> discrepancies;

  bool all_reproduced() const;
  std::string to_text() const;
};

/// Replays the axiom table: "yes" cells on at least `trials` seeded random
/// instances, "no" and "only for p = 1" cells on the known
/// counterexamples (p = 2, 3, inf) backed by seeded searches.
Table1Report run_table1_suite(std::uint64_t seed, std::size_t trials);

}  // namespace metricvote
