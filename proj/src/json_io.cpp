#include "metricvote/json_io.hpp"

#include <fstream>

#include "metricvote/error.hpp"

namespace metricvote {
namespace {

std::vector<std::string> strings_of(const Json& value, const std::string& what) {
  if (!value.is_array()) throw ValidationError(what + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw ValidationError(what + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

RawBallot ballot_from_json(const Json& value, std::size_t index) {
  const std::string what = "voter " + std::to_string(index);
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return value.get<double>();
  if (value.is_object()) {
    std::vector<std::pair<std::string, double>> weights;
    for (const auto& [key, w] : value.items()) {
      if (!w.is_number()) throw ValidationError(what + ": budget weights must be numbers");
      weights.emplace_back(key, w.get<double>());
    }
    return weights;
  }
  if (value.is_array()) return strings_of(value, what);
  throw ValidationError(what + ": unsupported ballot type");
}

}  // namespace

RawElection raw_election_from_json(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("election must be a JSON object");
  RawElection raw;
  if (!doc.contains("setting") || !doc["setting"].is_string())
    throw ValidationError("missing string field 'setting'");
  raw.setting = doc["setting"].get<std::string>();
  if (doc.contains("alternatives") && !doc["alternatives"].is_null())
    raw.alternatives = strings_of(doc["alternatives"], "alternatives");
  if (doc.contains("k") && !doc["k"].is_null()) {
    if (!doc["k"].is_number_integer()) throw ValidationError("'k' must be an integer");
    raw.k = doc["k"].get<long long>();
  }
  if (!doc.contains("voters") || !doc["voters"].is_array())
    throw ValidationError("missing array field 'voters'");
  for (std::size_t i = 0; i < doc["voters"].size(); ++i)
    raw.voters.push_back(ballot_from_json(doc["voters"][i], i));
  return raw;
}

Election election_from_json(const Json& doc) { return validate_election(raw_election_from_json(doc)); }

Election load_election(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return election_from_json(doc);
}

Json election_to_json(const Election& election) {
  const RawElection raw = to_raw(election);
  Json doc;
  doc["setting"] = raw.setting;
  if (raw.alternatives) doc["alternatives"] = *raw.alternatives;
  if (raw.k) doc["k"] = *raw.k;
  Json voters = Json::array();
  for (const RawBallot& b : raw.voters) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::vector<std::pair<std::string, double>>>) {
            Json obj = Json::object();
            for (const auto& [id, w] : v) obj[id] = w;
            voters.push_back(obj);
          } else {
            voters.push_back(v);
          }
        },
        b);
  }
  doc["voters"] = voters;
  return doc;
}

Json point_to_json(const Point& point) {
  return std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Label>) return p.id;
        else if constexpr (std::is_same_v<T, Real>) return p.value;
        else if constexpr (std::is_same_v<T, Simplex>) return p.weights;
        else if constexpr (std::is_same_v<T, Permutation>) return p.order;
        else if constexpr (std::is_same_v<T, Subset>) return p.members;
        else return p.sentences;
      },
      point);
}

Point point_from_json(Setting setting, const Json& value) {
  switch (setting) {
    case Setting::plurality:
      if (!value.is_string()) throw ValidationError("expected a label string");
      return Label{value.get<std::string>()};
    case Setting::line:
      if (!value.is_number()) throw ValidationError("expected a number");
      return Real{value.get<double>()};
    case Setting::budget: {
      if (!value.is_array()) throw ValidationError("expected an array of weights");
      std::vector<double> w;
      for (const auto& x : value) {
        if (!x.is_number()) throw ValidationError("expected an array of weights");
        w.push_back(x.get<double>());
      }
      return Simplex{w};
    }
    case Setting::ranking: return Permutation{strings_of(value, "ranking")};
    case Setting::committee:
    case Setting::committee_fixed_k: return make_subset(strings_of(value, "committee"));
    case Setting::legislation: return Document{strings_of(value, "document")};
  }
  throw ValidationError("unknown setting");
}

Json result_to_json(const AggregationResult& result) {
  Json doc;
  Json winners = Json::array();
  for (const Point& w : result.winners) winners.push_back(canonical_encode(w));
  doc["winners"] = winners;
  doc["representative"] = result.has_winner() ? point_to_json(result.representative()) : Json(nullptr);
  doc["objective"] = result.objective ? Json(*result.objective) : Json(nullptr);
  doc["unique"] = result.unique;
  doc["truncated"] = result.diagnostics.truncated;
  doc["converged"] = result.diagnostics.converged;
  doc["witness"] = result.witness ? point_to_json(*result.witness) : Json(nullptr);

  const auto& d = result.diagnostics;
  Json diag;
  diag["method"] = std::string(to_string(result.spec.method));
  diag["p"] = result.spec.p.to_string();
  diag["tie_break"] = result.spec.tie_break == TieBreak::lexicographic ? "lex" : "report-all";
  diag["iterations"] = d.iterations;
  diag["heuristic"] = d.heuristic;
  diag["interval"] = d.interval ? Json::array({d.interval->first, d.interval->second}) : Json(nullptr);
  diag["reason"] = d.reason.empty() ? Json(nullptr) : Json(d.reason);
  diag["notes"] = d.notes;
  doc["diagnostics"] = diag;
  return doc;
}

Json table1_to_json(const Table1Report& report) {
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    Json cell;
    cell["setting"] = c.setting;
    cell["method"] = c.method;
    cell["property"] = c.property;
    cell["claimed"] = c.claimed;
    cell["observed"] = c.observed;
    cell["trials"] = c.trials;
    cell["violations"] = c.violations;
    cell["reproduced"] = c.reproduced;
    cell["evidence"] = c.evidence;
    cells.push_back(cell);
  }
  Json doc;
  doc["cells"] = cells;
  doc["discrepancies"] = report.discrepancies;
  doc["all_reproduced"] = report.all_reproduced();
  return doc;
}

}  // namespace metricvote
