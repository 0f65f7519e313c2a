#pragma once

#include <cstddef>
#include <vector>

#include "metricvote/election.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

inline constexpr std::size_t kCommitteeEnumerationGuard = 22;
inline constexpr std::size_t kCommitteeCondorcetGuard = 10;

/// Approval count of each alternative, in Election::alternatives order.
std::vector<std::size_t> approval_counts(const Election& election);

/// L_1 over all subsets: the median element (alternatives approved by at
/// least n/2 voters). Alternatives at exactly n/2 may be dropped freely, so
/// the co-winner set is every such combination; the representative keeps
/// them all.
AggregationResult solve_median_element(const Election& election, const AggregationSpec& spec = {});

/// L_1 over size-k subsets: the k most-approved alternatives, with every
/// choice among boundary ties reported.
AggregationResult solve_topk_approval(const Election& election, const AggregationSpec& spec = {});

/// L_inf (closest string) by exhaustive search over 2^m or size-k subsets.
/// Throws GuardExceeded when m > kCommitteeEnumerationGuard.
AggregationResult solve_closest_subset(const Election& election, const AggregationSpec& spec);

/// Exhaustive L_p or reduced L_p (per spec.method) over 2^m or size-k subsets.
AggregationResult solve_committee_lp(const Election& election, const AggregationSpec& spec);

/// Exact Condorcet winners over 2^m or size-k subsets (m <= 10).
AggregationResult solve_committee_condorcet(const Election& election, const AggregationSpec& spec);

}  // namespace metricvote
