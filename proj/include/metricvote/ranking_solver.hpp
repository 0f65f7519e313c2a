#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "metricvote/election.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

inline constexpr std::size_t kKemenyGuard = 18;
inline constexpr std::size_t kExhaustiveRankingGuard = 9;
inline constexpr std::size_t kRankingCondorcetGuard = 6;

/// above(a, b): number of voters ranking a above b. Voters may rank only a
/// subset of the alternatives; pairs they do not rank count for neither side.
class PairwiseMatrix {
 public:
  explicit PairwiseMatrix(std::size_t alternatives);

  /// `order` lists distinct alternative indices, most preferred first.
  void add_order(std::span<const int> order);

  std::size_t size() const { return size_; }
  std::int64_t above(int a, int b) const { return counts_[index(a, b)]; }

  /// Kemeny objective of a full order: sum over pairs (u placed before v)
  /// of above(v, u).
  std::int64_t disagreement(std::span<const int> order) const;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * size_ + static_cast<std::size_t>(b);
  }
  std::size_t size_;
  std::vector<std::int64_t> counts_;
};

/// Index-level ranking results; orders are full orders over 0..z-1.
struct RankingOutcome {
  std::vector<std::vector<int>> orders;
  double objective = 0.0;
  bool truncated = false;
  std::size_t iterations = 0;
};

/// Exact Kemeny orders by dynamic programming over subsets: best(S) is the
/// cheapest order of S, built by choosing which element of S is placed last.
/// All optimal orders are recovered by backtracking, up to `cap`.
/// Throws GuardExceeded when z > kKemenyGuard.
RankingOutcome kemeny_dp(const PairwiseMatrix& pairwise, std::size_t cap = kWinnerCap);

/// Exhaustive L_p / reduced L_p (per spec.method, spec.p) over all z!
/// orders, with distance to each voter = number of that voter's ranked pairs
/// placed in the opposite order. Throws GuardExceeded when z >
/// kExhaustiveRankingGuard.
RankingOutcome exhaustive_rankings(std::size_t z, const std::vector<std::vector<int>>& voters,
                                   const AggregationSpec& spec);

/// Adjacent-transposition hill climbing from every start order and from
/// `random_restarts` random orders drawn with `seed`; returns the distinct
/// best orders found.
RankingOutcome local_search_rankings(const PairwiseMatrix& pairwise,
                                     const std::vector<std::vector<int>>& starts,
                                     std::size_t random_restarts, std::uint64_t seed);

/// L_1: Kemeny rankings (subset DP, z <= 18).
AggregationResult solve_kemeny(const Election& election, const AggregationSpec& spec);

/// L_inf: center permutations by enumeration (z <= 9).
AggregationResult solve_center_permutation(const Election& election, const AggregationSpec& spec);

/// Exhaustive L_p or reduced L_p (z <= 9).
AggregationResult solve_ranking_lp(const Election& election, const AggregationSpec& spec);

/// Exact Condorcet winners via a tournament among all z! orders (z <= 6).
AggregationResult solve_ranking_condorcet(const Election& election, const AggregationSpec& spec);

/// Heuristic Kemeny for any z; flagged heuristic in diagnostics.
AggregationResult kemeny_local_search(const Election& election, const AggregationSpec& spec);

}  // namespace metricvote
