#pragma once

#include <cstddef>

#include "metricvote/election.hpp"
#include "metricvote/random.hpp"

namespace metricvote {

/// Size knobs for random elections. `m` is the alternative count (sentence
/// pool for legislation, dimension for budget); ignored for line.
struct InstanceShape {
  std::size_t n = 5;
  std::size_t m = 3;
  /// committee_fixed_k only; drawn uniformly from [0, m] when unset.
  std::optional<std::size_t> k;
  /// Longest generated document (legislation).
  std::size_t max_document = 3;
};

/// Alternative ids "a", "b", ... (then "a1", "b1", ... past 26).
std::vector<std::string> alternative_names(std::size_t m);

/// A random valid election. Line voters are small integers half of the
/// time so that ties and repeated points occur; budget voters are Dirichlet
/// draws, sometimes restricted to a random face of the simplex.
Election random_election(Setting setting, const InstanceShape& shape, Rng& rng);

/// A random point of the election's outcome space.
Point random_point(const Election& election, Rng& rng);

/// Moves ceil(n/2) + extra voters (capped at n) onto one point, either an
/// existing voter's or a fresh random one.
Election plant_majority(const Election& election, std::size_t extra, Rng& rng);

}  // namespace metricvote
