#pragma once

#include <cstddef>
#include <vector>

#include "metricvote/election.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

/// Votes per alternative, in Election::alternatives order.
std::vector<std::size_t> plurality_counts(const Election& election);

/// Closed forms under the discrete metric. Finite p and both reduced forms
/// give the plurality winners; p = inf ties every alternative unless the
/// profile is unanimous.
AggregationResult solve_plurality_lp(const Election& election, const AggregationSpec& spec);

/// x beats y exactly when x has more votes, so the strict winner is a sole
/// plurality leader and the weak winners are all plurality leaders.
AggregationResult solve_plurality_condorcet(const Election& election, const AggregationSpec& spec);

}  // namespace metricvote
