#include "metricvote/plurality_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace metricvote {
namespace {

void require_plurality(const Election& election) {
  if (election.setting != Setting::plurality)
    throw std::invalid_argument("plurality solver requires a plurality election");
}

std::vector<std::size_t> leaders(const std::vector<std::size_t>& counts) {
  const std::size_t top = *std::max_element(counts.begin(), counts.end());
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < counts.size(); ++a)
    if (counts[a] == top) out.push_back(a);
  return out;
}

}  // namespace

std::vector<std::size_t> plurality_counts(const Election& election) {
  require_plurality(election);
  const auto index = alternative_index(election);
  std::vector<std::size_t> counts(election.m(), 0);
  for (const Point& v : election.voters)
    ++counts[static_cast<std::size_t>(index.at(std::get<Label>(v).id))];
  return counts;
}

AggregationResult solve_plurality_lp(const Election& election, const AggregationSpec& spec) {
  const auto counts = plurality_counts(election);
  const auto top = leaders(counts);
  const std::size_t best = counts[top.front()];
  AggregationResult r;
  r.spec = spec;
  if (spec.p.is_infinite() && spec.method == Method::lp) {
    if (best == election.n()) {
      r.winners.push_back(Label{election.alternatives[top.front()]});
      r.objective = 0.0;
    } else {
      for (const auto& a : election.alternatives) r.winners.push_back(Label{a});
      r.objective = 1.0;
    }
  } else {
    for (std::size_t a : top) r.winners.push_back(Label{election.alternatives[a]});
    r.objective = spec.p.is_infinite() ? (best == election.n() ? 0.0 : 1.0)
                                       : static_cast<double>(election.n() - best);
  }
  r.unique = r.winners.size() == 1;
  finalize_winners(r);
  return r;
}

AggregationResult solve_plurality_condorcet(const Election& election, const AggregationSpec& spec) {
  const auto counts = plurality_counts(election);
  const auto top = leaders(counts);
  AggregationResult r;
  r.spec = spec;
  r.spec.method = Method::condorcet;
  if (!spec.strict_condorcet || top.size() == 1)
    for (std::size_t a : top) r.winners.push_back(Label{election.alternatives[a]});
  if (r.winners.empty()) r.diagnostics.reason = "no_condorcet_winner";
  r.unique = r.winners.size() == 1;
  finalize_winners(r);
  return r;
}

}  // namespace metricvote
