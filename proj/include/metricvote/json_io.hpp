#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "metricvote/axioms.hpp"
#include "metricvote/election.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

using Json = nlohmann::ordered_json;

/// Maps JSON ballots onto RawBallot shapes; shape/setting agreement is left
/// to validate_election. Throws ValidationError.
RawElection raw_election_from_json(const Json& doc);
Election election_from_json(const Json& doc);
/// Reads and validates an election file. Throws ValidationError.
Election load_election(const std::filesystem::path& path);

Json election_to_json(const Election& election);

/// Label -> string, Real -> number, Simplex -> array of numbers,
/// Permutation/Subset/Document -> array of strings.
Json point_to_json(const Point& point);
/// Inverse of point_to_json for the given setting. Throws ValidationError.
Point point_from_json(Setting setting, const Json& value);

Json result_to_json(const AggregationResult& result);
Json table1_to_json(const Table1Report& report);

}  // namespace metricvote
