#include "metricvote/legislation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "metricvote/committee_solver.hpp"
#include "metricvote/error.hpp"
#include "metricvote/metrics.hpp"
#include "metricvote/oracle.hpp"
#include "metricvote/selection.hpp"

namespace metricvote {
namespace {

void require_legislation(const Election& election) {
  if (election.setting != Setting::legislation)
    throw std::invalid_argument("legislation solver requires a legislation election");
}

[[noreturn]] void rethrow_with_phase(const GuardExceeded& e, const char* phase) {
  throw GuardExceeded(std::string(phase) + ": " + e.what(), e.required(), e.limit());
}

RankingOutcome order_phase2(const LegislationPlan& plan, const AggregationSpec& spec,
                            AggregationResult& r) {
  const std::size_t z = plan.elected.size();
  const PairwiseMatrix pm = plan.pairwise();
  if (spec.p.is_one() && spec.method == Method::lp && z <= kKemenyGuard) return kemeny_dp(pm);
  if (z <= kExhaustiveRankingGuard) {
    std::vector<std::vector<int>> voters;
    for (const auto& order : plan.projected)
      if (!order.empty()) voters.push_back(order);
    if (voters.empty()) voters.emplace_back();
    return exhaustive_rankings(z, voters, spec);
  }
  if (!r.diagnostics.heuristic)
    r.diagnostics.notes.push_back("phase 2: local search beyond the exact guard");
  r.diagnostics.heuristic = true;
  std::vector<std::vector<int>> starts;
  for (const auto& order : plan.projected)
    if (order.size() == z) starts.push_back(order);
  return local_search_rankings(pm, starts, 16, spec.seed);
}

}  // namespace

PairwiseMatrix LegislationPlan::pairwise() const {
  PairwiseMatrix pm(elected.size());
  for (const auto& order : projected) pm.add_order(order);
  return pm;
}

LegislationPlan plan_legislation(const Election& election,
                                 std::optional<std::vector<std::string>> elected) {
  require_legislation(election);
  LegislationPlan plan;
  plan.pool = election.alternatives;
  plan.ell = election.ell;
  plan.phase1.setting = Setting::committee;
  plan.phase1.alternatives = plan.pool;
  for (const Point& v : election.voters)
    plan.phase1.voters.push_back(make_subset(std::get<Document>(v).sentences));

  if (elected) {
    plan.elected = std::move(*elected);
  } else {
    const auto median = solve_median_element(plan.phase1);
    plan.elected = std::get<Subset>(median.representative()).members;
  }
  // Keep the pool order so positions are stable across runs.
  std::unordered_map<std::string, std::size_t> pool_pos;
  for (std::size_t i = 0; i < plan.pool.size(); ++i) pool_pos[plan.pool[i]] = i;
  for (const auto& s : plan.elected)
    if (!pool_pos.contains(s)) throw std::invalid_argument("elected sentence not in the pool: " + s);
  std::sort(plan.elected.begin(), plan.elected.end(),
            [&](const std::string& a, const std::string& b) { return pool_pos[a] < pool_pos[b]; });
  plan.elected.erase(std::unique(plan.elected.begin(), plan.elected.end()), plan.elected.end());

  std::unordered_map<std::string, int> position;
  for (std::size_t i = 0; i < plan.elected.size(); ++i)
    position[plan.elected[i]] = static_cast<int>(i);
  for (const Point& v : election.voters) {
    std::vector<int> order;
    for (const auto& s : std::get<Document>(v).sentences)
      if (auto it = position.find(s); it != position.end()) order.push_back(it->second);
    plan.coverage.push_back(order.size());
    plan.projected.push_back(std::move(order));
  }
  return plan;
}

AggregationResult solve_legislation(const Election& election, const AggregationSpec& spec) {
  require_legislation(election);
  if (spec.method == Method::condorcet) {
    const FiniteSpace space = enumerate_space(election);
    return brute_force_condorcet(election, space, spec.strict_condorcet, spec);
  }

  AggregationResult r;
  r.spec = spec;
  // Every tied phase-1 sentence set gets its own phase-2 ordering; the
  // winners are the union.
  std::vector<std::vector<std::string>> sets;
  try {
    const LegislationPlan base = plan_legislation(election, std::vector<std::string>{});
    const AggregationResult phase1 = spec.p.is_one() && spec.method == Method::lp
                                         ? solve_median_element(base.phase1, spec)
                                         : solve_committee_lp(base.phase1, spec);
    for (const Point& s : phase1.winners) {
      if (sets.size() == kPhase1Branches) {
        r.diagnostics.truncated = true;
        r.diagnostics.notes.push_back("phase 1: tied sentence sets beyond the branch cap skipped");
        break;
      }
      sets.push_back(std::get<Subset>(s).members);
    }
  } catch (const GuardExceeded& e) {
    rethrow_with_phase(e, "phase 1");
  }

  const std::size_t branches = sets.size();
  for (auto& set : sets) {
    const LegislationPlan plan = plan_legislation(election, std::move(set));
    RankingOutcome orders;
    try {
      orders = order_phase2(plan, spec, r);
    } catch (const GuardExceeded& e) {
      rethrow_with_phase(e, "phase 2");
    }
    r.diagnostics.iterations += orders.iterations;
    r.diagnostics.truncated = r.diagnostics.truncated || orders.truncated;
    for (const auto& order : orders.orders) {
      Document doc;
      for (int i : order) doc.sentences.push_back(plan.elected[static_cast<std::size_t>(i)]);
      r.winners.push_back(std::move(doc));
    }
  }
  // Phase-1 ties are broken by the document-space objective of each
  // branch's output, all candidates scored with one common ell.
  std::size_t ell = election.ell;
  for (const Point& w : r.winners) ell = std::max(ell, std::get<Document>(w).sentences.size());
  if (ell > election.ell) r.diagnostics.notes.push_back("ell extended to the output length for scoring");
  DistanceTable table(r.winners.size(), election.n());
  for (std::size_t c = 0; c < r.winners.size(); ++c)
    for (std::size_t v = 0; v < election.n(); ++v)
      table.at(c, v) = document_distance(std::get<Document>(election.voters[v]),
                                         std::get<Document>(r.winners[c]), ell);
  std::vector<std::size_t> rows(r.winners.size());
  std::iota(rows.begin(), rows.end(), 0);
  if (branches > 1) {
    const Selection best = spec.method == Method::reduced_lp
                               ? select_reduced_lp(table, spec.p, spec.tolerance)
                               : select_lp(table, spec.p, spec.tolerance);
    if (best.winners.size() < r.winners.size())
      r.diagnostics.notes.push_back("phase 1 tie broken by the document objective");
    rows = best.winners;
  }
  std::unordered_map<std::string, std::size_t> row_of;
  std::vector<Point> kept;
  for (std::size_t c : rows) {
    row_of.emplace(canonical_encode(r.winners[c]), c);
    kept.push_back(std::move(r.winners[c]));
  }
  r.winners = std::move(kept);

  const bool truncated = r.diagnostics.truncated;
  r.unique = r.winners.size() == 1 && !r.diagnostics.heuristic;
  finalize_winners(r);
  r.diagnostics.truncated = r.diagnostics.truncated || truncated;

  r.objective = lp_objective(table.row(row_of.at(canonical_encode(r.representative()))), spec.p);
  return r;
}

}  // namespace metricvote
