#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "metricvote/point.hpp"

namespace metricvote {

struct MetricDescriptor {
  Setting setting = Setting::plurality;
  /// Swap-cost denominator for documents (swap costs 1 / ell^2).
  std::optional<std::size_t> ell;
};

double discrete_distance(const Label& x, const Label& y);
double line_distance(const Real& x, const Real& y);
/// Euclidean. Throws std::invalid_argument on dimension mismatch.
double simplex_distance(const Simplex& x, const Simplex& y);

/// Number of discordant pairs, O(z log z). Throws std::invalid_argument when
/// the two orders are not over the same alternatives.
std::int64_t kendall_distance(const Permutation& x, const Permutation& y);
/// Index form: x and y are orders over {0, ..., z-1}.
std::int64_t kendall_distance(std::span<const int> x, std::span<const int> y);

/// Size of the symmetric difference.
std::int64_t hamming_distance(const Subset& x, const Subset& y);

/// Weighted Levenshtein over sentence sequences: unit insert and delete,
/// adjacent swap 1/ell^2. Evaluated as |set(x) xor set(y)| + inv(x, y)/ell^2,
/// where inv counts common-sentence pairs in opposite relative order.
/// Throws std::invalid_argument if ell < max(|x|, |y|).
double document_distance(const Document& x, const Document& y, std::size_t ell);
/// Index form over sentence ids; sequences must be duplicate-free.
double document_distance(std::span<const int> x, std::span<const int> y, std::size_t ell);

/// Inversions of common elements (the swap part of document_distance).
std::int64_t common_inversions(std::span<const int> x, std::span<const int> y);

/// Distance in the descriptor's setting. Throws std::invalid_argument when a
/// point does not match the setting.
double distance(const MetricDescriptor& metric, const Point& x, const Point& y);

/// Counts inversions of `values` by merge sort.
std::int64_t count_inversions(std::span<const int> values);

}  // namespace metricvote
