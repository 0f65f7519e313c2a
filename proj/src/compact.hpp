#pragma once

// Index-based point encodings shared by the finite-space code paths.

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "metricvote/election.hpp"

namespace metricvote::detail {

using Compact = std::vector<int>;
using IdIndex = std::unordered_map<std::string, int>;

/// Label -> {id}; Permutation -> order; Subset -> ascending ids;
/// Document -> sentence ids in order.
Compact to_compact(const Point& point, const IdIndex& index);
Point from_compact(Setting setting, const Compact& compact,
                   const std::vector<std::string>& alternatives);

/// Distance between compact points of a finite setting.
double compact_distance(Setting setting, const Compact& x, const Compact& y, std::size_t ell);

std::vector<Compact> compact_voters(const Election& election);

inline std::vector<std::string> ids_of(std::span<const int> compact,
                                       const std::vector<std::string>& alternatives) {
  std::vector<std::string> out;
  out.reserve(compact.size());
  for (int i : compact) out.push_back(alternatives[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace metricvote::detail
