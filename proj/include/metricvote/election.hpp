#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "metricvote/point.hpp"

namespace metricvote {

/// A ballot as it arrives from an external format, before any checking.
using RawBallot = std::variant<std::string,                                  // plurality
                               double,                                       // line
                               std::vector<std::pair<std::string, double>>,  // budget
                               std::vector<std::string>>;  // ranking, committee, legislation

struct RawElection {
  std::string setting;
  std::optional<std::vector<std::string>> alternatives;
  std::optional<long long> k;
  std::vector<RawBallot> voters;
};

/// A validated, normalized election. Produce one with validate_election().
struct Election {
  Setting setting = Setting::plurality;
  /// Alternative universe; the sentence pool for legislation, empty for line.
  std::vector<std::string> alternatives;
  std::vector<Point> voters;
  /// Committee size, committee_fixed_k only.
  std::optional<std::size_t> k;
  /// Longest voter document, legislation only.
  std::size_t ell = 0;

  std::size_t m() const { return alternatives.size(); }
  std::size_t n() const { return voters.size(); }

  bool operator==(const Election&) const = default;
};

/// Alternative id -> position in Election::alternatives.
std::unordered_map<std::string, int> alternative_index(const Election& election);

/// Normalizes simplex ballots, zero-fills budgets to the union of proposed
/// alternatives, deduplicates documents and committees, and derives ell.
/// Throws ValidationError.
Election validate_election(const RawElection& raw);

/// Inverse of validate_election on already-valid elections.
RawElection to_raw(const Election& election);

/// Same election with voter `index` replaced (no re-validation of other
/// voters). Legislation re-derives the sentence pool and ell.
Election with_voter(const Election& election, std::size_t index, Point point);

}  // namespace metricvote
