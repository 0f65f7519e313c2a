#include "metricvote/ranking_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "compact.hpp"
#include "metricvote/error.hpp"
#include "metricvote/metrics.hpp"
#include "metricvote/random.hpp"
#include "metricvote/selection.hpp"

namespace metricvote {
namespace {

constexpr std::size_t kRandomRestarts = 16;

std::vector<std::vector<int>> voter_orders(const Election& election) {
  if (election.setting != Setting::ranking)
    throw std::invalid_argument("ranking solver requires a ranking election");
  return detail::compact_voters(election);
}

PairwiseMatrix pairwise_of(std::size_t z, const std::vector<std::vector<int>>& orders) {
  PairwiseMatrix pm(z);
  for (const auto& o : orders) pm.add_order(o);
  return pm;
}

void check_guard(std::size_t z, std::size_t limit, const char* what) {
  if (z > limit) throw GuardExceeded(what, static_cast<double>(z), static_cast<double>(limit));
}

AggregationResult to_result(const Election& election, const AggregationSpec& spec,
                            const RankingOutcome& outcome) {
  AggregationResult r;
  r.spec = spec;
  r.objective = outcome.objective;
  for (const auto& o : outcome.orders)
    r.winners.emplace_back(Permutation{detail::ids_of(o, election.alternatives)});
  r.unique = r.winners.size() == 1 && !outcome.truncated;
  r.diagnostics.truncated = outcome.truncated;
  r.diagnostics.iterations = outcome.iterations;
  finalize_winners(r);
  return r;
}

/// Distance from a full order (given by positions) to a possibly partial
/// voter order: that voter's ranked pairs placed in opposite order.
double partial_distance(const std::vector<int>& position, const std::vector<int>& voter,
                        std::vector<int>& scratch) {
  scratch.clear();
  for (int a : voter) scratch.push_back(position[static_cast<std::size_t>(a)]);
  std::int64_t inversions = 0;
  for (std::size_t i = 0; i < scratch.size(); ++i)
    for (std::size_t j = i + 1; j < scratch.size(); ++j) inversions += scratch[i] > scratch[j];
  return static_cast<double>(inversions);
}

void backtrack(const std::vector<std::int64_t>& best, const PairwiseMatrix& pm, std::uint32_t set,
               std::vector<int>& suffix, std::size_t cap, RankingOutcome& out) {
  if (out.orders.size() >= cap) {
    out.truncated = true;
    return;
  }
  if (set == 0) {
    out.orders.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  const auto z = static_cast<int>(pm.size());
  for (int a = 0; a < z; ++a) {
    if (!(set >> a & 1U)) continue;
    const std::uint32_t rest = set & ~(std::uint32_t{1} << a);
    std::int64_t cost = 0;
    for (int b = 0; b < z; ++b)
      if (rest >> b & 1U) cost += pm.above(a, b);
    if (best[rest] + cost != best[set]) continue;
    suffix.push_back(a);
    backtrack(best, pm, rest, suffix, cap, out);
    suffix.pop_back();
    if (out.truncated) return;
  }
}

}  // namespace

PairwiseMatrix::PairwiseMatrix(std::size_t alternatives)
    : size_(alternatives), counts_(alternatives * alternatives, 0) {}

void PairwiseMatrix::add_order(std::span<const int> order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) ++counts_[index(order[i], order[j])];
}

std::int64_t PairwiseMatrix::disagreement(std::span<const int> order) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) total += above(order[j], order[i]);
  return total;
}

RankingOutcome kemeny_dp(const PairwiseMatrix& pairwise, std::size_t cap) {
  const std::size_t z = pairwise.size();
  check_guard(z, kKemenyGuard, "Kemeny subset DP: too many alternatives");
  const std::uint32_t full = z == 0 ? 0 : (std::uint32_t{1} << z) - 1;
  std::vector<std::int64_t> best(std::size_t{1} << z, std::numeric_limits<std::int64_t>::max());
  best[0] = 0;
  for (std::uint32_t set = 1; set <= full; ++set) {
    for (std::size_t a = 0; a < z; ++a) {
      if (!(set >> a & 1U)) continue;
      const std::uint32_t rest = set & ~(std::uint32_t{1} << a);
      // a goes last among `set`: voters ranking a above b disagree.
      std::int64_t cost = best[rest];
      for (std::size_t b = 0; b < z; ++b)
        if (rest >> b & 1U) cost += pairwise.above(static_cast<int>(a), static_cast<int>(b));
      best[set] = std::min(best[set], cost);
    }
  }
  RankingOutcome out;
  out.objective = static_cast<double>(best[full]);
  out.iterations = std::size_t{1} << z;
  std::vector<int> suffix;
  backtrack(best, pairwise, full, suffix, cap, out);
  return out;
}

RankingOutcome exhaustive_rankings(std::size_t z, const std::vector<std::vector<int>>& voters,
                                   const AggregationSpec& spec) {
  check_guard(z, kExhaustiveRankingGuard, "exhaustive ranking search: too many alternatives");
  std::vector<std::vector<int>> orders;
  std::vector<int> order(z);
  std::iota(order.begin(), order.end(), 0);
  do orders.push_back(order); while (std::next_permutation(order.begin(), order.end()));

  DistanceTable table(orders.size(), voters.size());
  std::vector<int> position(z), scratch;
  for (std::size_t c = 0; c < orders.size(); ++c) {
    for (std::size_t i = 0; i < z; ++i) position[static_cast<std::size_t>(orders[c][i])] = static_cast<int>(i);
    for (std::size_t v = 0; v < voters.size(); ++v)
      table.at(c, v) = partial_distance(position, voters[v], scratch);
  }
  const Selection sel = spec.method == Method::reduced_lp
                            ? select_reduced_lp(table, spec.p, spec.tolerance)
                            : select_lp(table, spec.p, spec.tolerance);
  RankingOutcome out;
  out.objective = sel.objective;
  out.iterations = orders.size();
  for (std::size_t c : sel.winners) out.orders.push_back(orders[c]);
  return out;
}

RankingOutcome local_search_rankings(const PairwiseMatrix& pairwise,
                                     const std::vector<std::vector<int>>& starts,
                                     std::size_t random_restarts, std::uint64_t seed) {
  const std::size_t z = pairwise.size();
  std::vector<std::vector<int>> seeds = starts;
  Rng rng(seed);
  for (std::size_t r = 0; r < random_restarts; ++r) {
    std::vector<int> order(z);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    seeds.push_back(std::move(order));
  }

  RankingOutcome out;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::set<std::vector<int>> found;
  for (auto order : seeds) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const int a = order[i], b = order[i + 1];
        if (pairwise.above(b, a) > pairwise.above(a, b)) {
          std::swap(order[i], order[i + 1]);
          improved = true;
        }
        ++out.iterations;
      }
    }
    const std::int64_t cost = pairwise.disagreement(order);
    if (cost < best) {
      best = cost;
      found.clear();
    }
    if (cost == best) found.insert(order);
  }
  out.objective = static_cast<double>(best);
  out.orders.assign(found.begin(), found.end());
  return out;
}

AggregationResult solve_kemeny(const Election& election, const AggregationSpec& spec) {
  const auto orders = voter_orders(election);
  AggregationSpec echo = spec;
  echo.p = Exponent::finite(1.0);
  return to_result(election, echo, kemeny_dp(pairwise_of(election.m(), orders)));
}

AggregationResult solve_center_permutation(const Election& election, const AggregationSpec& spec) {
  AggregationSpec echo = spec;
  echo.p = Exponent::infinity();
  return to_result(election, echo, exhaustive_rankings(election.m(), voter_orders(election), echo));
}

AggregationResult solve_ranking_lp(const Election& election, const AggregationSpec& spec) {
  return to_result(election, spec, exhaustive_rankings(election.m(), voter_orders(election), spec));
}

AggregationResult solve_ranking_condorcet(const Election& election, const AggregationSpec& spec) {
  const std::size_t z = election.m();
  check_guard(z, kRankingCondorcetGuard, "ranking Condorcet tournament: too many alternatives");
  const auto voters = voter_orders(election);
  std::vector<std::vector<int>> orders;
  std::vector<int> order(z);
  std::iota(order.begin(), order.end(), 0);
  do orders.push_back(order); while (std::next_permutation(order.begin(), order.end()));

  std::vector<std::vector<std::int64_t>> dist(orders.size(), std::vector<std::int64_t>(voters.size()));
  for (std::size_t c = 0; c < orders.size(); ++c)
    for (std::size_t v = 0; v < voters.size(); ++v) dist[c][v] = kendall_distance(orders[c], voters[v]);

  AggregationSpec echo = spec;
  echo.method = Method::condorcet;
  RankingOutcome outcome;
  for (std::size_t x = 0; x < orders.size(); ++x) {
    bool wins = true;
    for (std::size_t y = 0; y < orders.size() && wins; ++y) {
      if (x == y) continue;
      int pro = 0, con = 0;
      for (std::size_t v = 0; v < voters.size(); ++v) {
        pro += dist[x][v] < dist[y][v];
        con += dist[y][v] < dist[x][v];
      }
      wins = spec.strict_condorcet ? pro > con : pro >= con;
    }
    if (wins) outcome.orders.push_back(orders[x]);
  }
  auto r = to_result(election, echo, outcome);
  r.objective.reset();
  if (r.winners.empty()) r.diagnostics.reason = "no_condorcet_winner";
  return r;
}

AggregationResult kemeny_local_search(const Election& election, const AggregationSpec& spec) {
  const auto orders = voter_orders(election);
  AggregationSpec echo = spec;
  echo.p = Exponent::finite(1.0);
  auto r = to_result(election, echo,
                     local_search_rankings(pairwise_of(election.m(), orders), orders,
                                           kRandomRestarts, spec.seed));
  r.unique = false;
  r.diagnostics.heuristic = true;
  return r;
}

}  // namespace metricvote
