#include "metricvote/election.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "metricvote/error.hpp"

namespace metricvote {
namespace {

constexpr double kSimplexSumTolerance = 1e-6;

[[noreturn]] void fail(const std::string& message) { throw ValidationError(message); }

std::string voter_tag(std::size_t i) { return "voter " + std::to_string(i) + ": "; }

void check_alternative_id(const std::string& id) {
  if (id.empty()) fail("empty alternative id");
  if (id.find_first_of(",>") != std::string::npos || id.find(kSentenceSeparator) != std::string::npos)
    fail("alternative id '" + id + "' contains a reserved character (',' or '>')");
}

template <class T>
const T& expect(const RawBallot& ballot, std::size_t i, std::string_view setting) {
  if (const T* value = std::get_if<T>(&ballot)) return *value;
  fail(voter_tag(i) + "ballot shape does not match setting " + std::string(setting));
}

std::vector<std::string> declared_alternatives(const RawElection& raw, bool required) {
  if (!raw.alternatives) {
    if (required) fail("setting " + raw.setting + " requires an alternatives list");
    return {};
  }
  std::unordered_set<std::string> seen;
  for (const auto& a : *raw.alternatives) {
    check_alternative_id(a);
    if (!seen.insert(a).second) fail("duplicate alternative '" + a + "'");
  }
  return *raw.alternatives;
}

}  // namespace

std::unordered_map<std::string, int> alternative_index(const Election& election) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < election.alternatives.size(); ++i)
    index.emplace(election.alternatives[i], static_cast<int>(i));
  return index;
}

Election validate_election(const RawElection& raw) {
  const auto setting = parse_setting(raw.setting);
  if (!setting) fail("unknown setting '" + raw.setting + "'");
  if (raw.voters.empty()) fail("election has no voters");

  Election election;
  election.setting = *setting;
  const std::string_view name = raw.setting;

  switch (*setting) {
    case Setting::plurality: {
      election.alternatives = declared_alternatives(raw, true);
      std::unordered_set<std::string> universe(election.alternatives.begin(),
                                               election.alternatives.end());
      for (std::size_t i = 0; i < raw.voters.size(); ++i) {
        const auto& id = expect<std::string>(raw.voters[i], i, name);
        if (!universe.count(id)) fail(voter_tag(i) + "unknown alternative '" + id + "'");
        election.voters.emplace_back(Label{id});
      }
      break;
    }
    case Setting::line: {
      for (std::size_t i = 0; i < raw.voters.size(); ++i) {
        const double v = expect<double>(raw.voters[i], i, name);
        if (!std::isfinite(v)) fail(voter_tag(i) + "non-finite position");
        election.voters.emplace_back(Real{v});
      }
      break;
    }
    case Setting::budget: {
      using Proposal = std::vector<std::pair<std::string, double>>;
      election.alternatives = declared_alternatives(raw, false);
      std::unordered_set<std::string> universe(election.alternatives.begin(),
                                               election.alternatives.end());
      for (std::size_t i = 0; i < raw.voters.size(); ++i) {
        for (const auto& [id, w] : expect<Proposal>(raw.voters[i], i, name)) {
          check_alternative_id(id);
          if (universe.insert(id).second) election.alternatives.push_back(id);
        }
      }
      const auto index = alternative_index(election);
      for (std::size_t i = 0; i < raw.voters.size(); ++i) {
        std::vector<double> weights(election.m(), 0.0);
        std::vector<bool> seen(election.m(), false);
        for (const auto& [id, w] : std::get<Proposal>(raw.voters[i])) {
          const int a = index.at(id);
          if (seen[a]) fail(voter_tag(i) + "alternative '" + id + "' funded twice");
          seen[a] = true;
          if (!std::isfinite(w) || w < 0.0) fail(voter_tag(i) + "negative or non-finite weight");
          weights[a] = w;
        }
        const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
        if (std::abs(sum - 1.0) > kSimplexSumTolerance)
          fail(voter_tag(i) + "weights sum to " + std::to_string(sum) + ", expected 1");
        if (std::abs(sum - 1.0) > 1e-12)
          for (double& w : weights) w /= sum;
        election.voters.emplace_back(Simplex{std::move(weights)});
      }
      break;
    }
    case Setting::ranking: {
      election.alternatives = declared_alternatives(raw, true);
      const auto index = alternative_index(election);
      for (std::size_t i = 0; i < raw.voters.size(); ++i) {
        const auto& order = expect<std::vector<std::string>>(raw.voters[i], i, name);
        std::vector<bool> seen(election.m(), false);
        bool bijection = order.size() == election.m();
        for (const auto& id : order) {
          const auto it = index.find(id);
          if (it == index.end()) fail(voter_tag(i) + "unknown alternative '" + id + "'");
          if (seen[it->second]) bijection = false;
          seen[it->second] = true;
        }
        if (!bijection) fail(voter_tag(i) + "ranking is not a bijection over the alternatives");
        election.voters.emplace_back(Permutation{order});
      }
      break;
    }
    case Setting::committee:
    case Setting::committee_fixed_k: {
      election.alternatives = declared_alternatives(raw, true);
      const auto index = alternative_index(election);
      if (*setting == Setting::committee_fixed_k) {
        if (!raw.k) fail("committee_fixed_k requires k");
        if (*raw.k < 0 || static_cast<std::size_t>(*raw.k) > election.m())
          fail("k = " + std::to_string(*raw.k) + " outside [0, m]");
        election.k = static_cast<std::size_t>(*raw.k);
      }
      for (std::size_t i = 0; i < raw.voters.size(); ++i) {
        const auto& members = expect<std::vector<std::string>>(raw.voters[i], i, name);
        for (const auto& id : members)
          if (!index.count(id)) fail(voter_tag(i) + "unknown alternative '" + id + "'");
        election.voters.emplace_back(make_subset(members));
      }
      break;
    }
    case Setting::legislation: {
      std::unordered_set<std::string> pool;
      if (raw.alternatives) {
        for (const auto& s : *raw.alternatives)
          if (pool.insert(s).second) election.alternatives.push_back(s);
      }
      for (std::size_t i = 0; i < raw.voters.size(); ++i) {
        const auto& sentences = expect<std::vector<std::string>>(raw.voters[i], i, name);
        Document doc;
        std::unordered_set<std::string> seen;
        for (const auto& s : sentences) {
          if (s.empty()) fail(voter_tag(i) + "empty sentence");
          if (s.find(kSentenceSeparator) != std::string::npos)
            fail(voter_tag(i) + "sentence contains the reserved separator byte");
          if (!seen.insert(s).second) continue;
          doc.sentences.push_back(s);
          if (pool.insert(s).second) election.alternatives.push_back(s);
        }
        election.ell = std::max(election.ell, doc.sentences.size());
        election.voters.emplace_back(std::move(doc));
      }
      election.ell = std::max<std::size_t>(election.ell, 1);
      break;
    }
  }
  return election;
}

RawElection to_raw(const Election& election) {
  RawElection raw;
  raw.setting = std::string(to_string(election.setting));
  if (election.setting != Setting::line) raw.alternatives = election.alternatives;
  if (election.k) raw.k = static_cast<long long>(*election.k);
  for (const auto& voter : election.voters) {
    struct ToRaw {
      const Election& e;
      RawBallot operator()(const Label& l) const { return l.id; }
      RawBallot operator()(const Real& r) const { return r.value; }
      RawBallot operator()(const Simplex& s) const {
        std::vector<std::pair<std::string, double>> proposal;
        for (std::size_t a = 0; a < s.weights.size(); ++a)
          if (s.weights[a] != 0.0) proposal.emplace_back(e.alternatives[a], s.weights[a]);
        return proposal;
      }
      RawBallot operator()(const Permutation& p) const { return p.order; }
      RawBallot operator()(const Subset& s) const { return s.members; }
      RawBallot operator()(const Document& d) const { return d.sentences; }
    };
    raw.voters.push_back(std::visit(ToRaw{election}, voter));
  }
  return raw;
}

Election with_voter(const Election& election, std::size_t index, Point point) {
  Election out = election;
  out.voters.at(index) = std::move(point);
  if (out.setting == Setting::legislation) {
    out.ell = 1;
    out.alternatives.clear();
    std::unordered_set<std::string> seen;
    for (const auto& v : out.voters) {
      const auto& sentences = std::get<Document>(v).sentences;
      out.ell = std::max(out.ell, sentences.size());
      for (const auto& s : sentences)
        if (seen.insert(s).second) out.alternatives.push_back(s);
    }
  }
  return out;
}

}  // namespace metricvote
