#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metricvote/election.hpp"
#include "metricvote/ranking_solver.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

/// Tied phase-1 sentence sets ordered in phase 2 before truncating.
inline constexpr std::size_t kPhase1Branches = 64;

/// Two-phase view of a legislation election: which sentences, then in what
/// order.
struct LegislationPlan {
  /// Sentence pool, in order of first appearance.
  std::vector<std::string> pool;
  /// Committee election over the pool; voter i's ideal set is the sentence
  /// set of document i.
  Election phase1;
  /// Phase-2 alternatives, a subset of the pool in pool order.
  std::vector<std::string> elected;
  /// Per voter: positions into `elected`, in the voter's document order.
  std::vector<std::vector<int>> projected;
  /// Per voter: how many elected sentences the document contains.
  std::vector<std::size_t> coverage;
  std::size_t ell = 0;

  /// Pairwise counts over the elected sentences; a voter only contributes
  /// pairs whose sentences both occur in its document.
  PairwiseMatrix pairwise() const;
};

/// Builds both phase views. Without `elected`, phase 2 runs over the median
/// element of phase 1 (every sentence in at least half of the documents).
LegislationPlan plan_legislation(const Election& election,
                                 std::optional<std::vector<std::string>> elected = std::nullopt);

/// Phase 1 through the committee solvers (median element for p = 1,
/// exhaustive otherwise). Each tied sentence set is then ordered by the
/// ranking solvers: Kemeny DP for p = 1 up to kKemenyGuard sentences,
/// exhaustive up to kExhaustiveRankingGuard otherwise, flagged local search
/// beyond. When phase 1 ties, the outputs of all tied sets are scored in the
/// document metric and only the best are kept. Condorcet runs the exact
/// tournament over documents no longer than ell.
AggregationResult solve_legislation(const Election& election, const AggregationSpec& spec);

}  // namespace metricvote
