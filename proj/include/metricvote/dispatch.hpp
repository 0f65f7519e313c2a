#pragma once

#include "metricvote/election.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

/// Routes to the specialized solver for the election's setting and the
/// spec's method and exponent. Validates the spec first.
AggregationResult solve(const Election& election, const AggregationSpec& spec);

}  // namespace metricvote
