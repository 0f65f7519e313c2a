#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "metricvote/election.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

inline constexpr std::size_t kSpaceGuard = 2'000'000;
inline constexpr double kPairwiseGuard = 1e9;

/// Explicit enumeration of a finite outcome space, duplicate-free.
struct FiniteSpace {
  Setting setting = Setting::plurality;
  std::vector<Point> points;
  /// Swap-cost denominator used for documents; max(ell, length bound).
  std::size_t ell = 0;

  std::size_t size() const { return points.size(); }
};

/// All labels; all z! orders; all 2^m (or size-k) subsets; all ordered
/// arrangements of subsets of the sentence pool up to `length_bound`
/// (default: the election's ell). Throws GuardExceeded past kSpaceGuard.
FiniteSpace enumerate_space(const Election& election,
                            std::optional<std::size_t> length_bound = std::nullopt);

/// Exact L_p (or reduced L_p when spec.method is reduced_lp) by evaluating
/// every point of the space.
AggregationResult brute_force_lp(const Election& election, const FiniteSpace& space,
                                 const AggregationSpec& spec);

/// Exact Condorcet winners by a full pairwise tournament over the space.
/// Throws GuardExceeded when |space|^2 * n > kPairwiseGuard.
AggregationResult brute_force_condorcet(const Election& election, const FiniteSpace& space,
                                        bool strict, const AggregationSpec& spec = {});

/// Exact minimum weighted edit cost (insert 1, delete 1, adjacent swap
/// 1/ell^2) by uniform-cost search over document states. Requires
/// |x|, |y| <= 5 and |x u y| <= 6; throws GuardExceeded otherwise.
double bfs_edit_distance(const Document& x, const Document& y, std::size_t ell);

/// Euclidean projection onto the probability simplex.
std::vector<double> project_onto_simplex(std::span<const double> point);

struct ContinuousOptimum {
  std::vector<double> point;
  double objective = 0.0;
};

/// Projected subgradient descent on sum ||x - v_i|| from `starts` random
/// simplex points (diminishing steps, best iterate kept).
ContinuousOptimum subgradient_geometric_median(const std::vector<std::vector<double>>& points,
                                               std::size_t starts, std::uint64_t seed,
                                               std::size_t iterations = 20000);

/// Smallest sum |v_i - x|^p (max for inf) over a uniform grid on
/// [min v, max v] plus the voter positions.
double line_grid_minimum(std::span<const double> values, const Exponent& p,
                         std::size_t samples = 100001);

}  // namespace metricvote
