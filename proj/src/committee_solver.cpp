#include "metricvote/committee_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "compact.hpp"
#include "metricvote/error.hpp"
#include "metricvote/selection.hpp"

namespace metricvote {
namespace {

using Mask = std::uint32_t;

void require_committee(const Election& election) {
  if (election.setting != Setting::committee && election.setting != Setting::committee_fixed_k)
    throw std::invalid_argument("committee solver requires a committee election");
}

std::vector<Mask> voter_masks(const Election& election) {
  std::vector<Mask> masks;
  for (const auto& c : detail::compact_voters(election)) {
    Mask m = 0;
    for (int a : c) m |= Mask{1} << a;
    masks.push_back(m);
  }
  return masks;
}

Subset subset_of(Mask mask, const Election& election) {
  std::vector<std::string> members;
  for (std::size_t a = 0; a < election.m(); ++a)
    if (mask >> a & 1U) members.push_back(election.alternatives[a]);
  return make_subset(std::move(members));
}

Subset subset_of(const std::vector<bool>& chosen, const Election& election) {
  std::vector<std::string> members;
  for (std::size_t a = 0; a < election.m(); ++a)
    if (chosen[a]) members.push_back(election.alternatives[a]);
  return make_subset(std::move(members));
}

double symmetric_difference_total(const std::vector<bool>& chosen, const Election& election) {
  const auto counts = approval_counts(election);
  double total = 0.0;
  for (std::size_t a = 0; a < election.m(); ++a)
    total += static_cast<double>(chosen[a] ? election.n() - counts[a] : counts[a]);
  return total;
}

/// Visits every mask the setting admits (all subsets, or size-k ones).
template <class Visit>
void for_each_candidate(const Election& election, Visit&& visit) {
  const std::size_t m = election.m();
  if (m > kCommitteeEnumerationGuard)
    throw GuardExceeded("committee enumeration: too many alternatives", static_cast<double>(m),
                        static_cast<double>(kCommitteeEnumerationGuard));
  const std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (election.k && static_cast<std::size_t>(std::popcount(mask)) != *election.k) continue;
    visit(static_cast<Mask>(mask));
  }
}

/// Enumerates all choices of `pick` elements from `pool`, calling `emit`
/// until it returns false.
template <class Emit>
bool choose(const std::vector<std::size_t>& pool, std::size_t pick, std::size_t start,
            std::vector<std::size_t>& chosen, Emit&& emit) {
  if (chosen.size() == pick) return emit(chosen);
  for (std::size_t i = start; i + (pick - chosen.size()) <= pool.size(); ++i) {
    chosen.push_back(pool[i]);
    if (!choose(pool, pick, i + 1, chosen, emit)) return false;
    chosen.pop_back();
  }
  return true;
}

AggregationResult exhaustive(const Election& election, const AggregationSpec& spec) {
  require_committee(election);
  const auto voters = voter_masks(election);
  std::vector<double> dist(voters.size());
  auto distances = [&](Mask x) {
    for (std::size_t v = 0; v < voters.size(); ++v)
      dist[v] = static_cast<double>(std::popcount(x ^ voters[v]));
    return std::span<const double>(dist);
  };

  // Stream the objective, keeping near-ties of the running minimum; the
  // reduced refinement then only needs the tied candidates.
  double best = INFINITY;
  std::vector<std::pair<Mask, double>> tied;
  for_each_candidate(election, [&](Mask x) {
    const double f = lp_objective(distances(x), spec.p);
    if (f < best && !nearly_equal(f, best, spec.tolerance)) {
      best = f;
      std::erase_if(tied, [&](const auto& t) { return !nearly_equal(t.second, best, spec.tolerance); });
    }
    if (f <= best || nearly_equal(f, best, spec.tolerance)) tied.emplace_back(x, f);
  });

  DistanceTable table(tied.size(), voters.size());
  for (std::size_t c = 0; c < tied.size(); ++c) {
    const auto d = distances(tied[c].first);
    for (std::size_t v = 0; v < d.size(); ++v) table.at(c, v) = d[v];
  }
  const Selection sel = spec.method == Method::reduced_lp
                            ? select_reduced_lp(table, spec.p, spec.tolerance)
                            : select_lp(table, spec.p, spec.tolerance);
  AggregationResult r;
  r.spec = spec;
  r.objective = sel.objective;
  for (std::size_t c : sel.winners) r.winners.push_back(subset_of(tied[c].first, election));
  r.unique = r.winners.size() == 1;
  finalize_winners(r);
  return r;
}

}  // namespace

std::vector<std::size_t> approval_counts(const Election& election) {
  require_committee(election);
  std::vector<std::size_t> counts(election.m(), 0);
  for (const auto& c : detail::compact_voters(election))
    for (int a : c) ++counts[static_cast<std::size_t>(a)];
  return counts;
}

AggregationResult solve_median_element(const Election& election, const AggregationSpec& spec) {
  const auto counts = approval_counts(election);
  const std::size_t n = election.n();
  std::vector<bool> chosen(election.m(), false);
  std::vector<std::size_t> threshold;
  for (std::size_t a = 0; a < election.m(); ++a) {
    chosen[a] = 2 * counts[a] >= n;
    if (2 * counts[a] == n) threshold.push_back(a);
  }

  AggregationResult r;
  r.spec = spec;
  r.spec.method = Method::lp;
  r.spec.p = Exponent::finite(1.0);
  r.objective = symmetric_difference_total(chosen, election);
  r.representative_point = subset_of(chosen, election);
  r.unique = threshold.empty();

  // Each threshold alternative may be included or not.
  const std::size_t t = threshold.size();
  const std::uint64_t combos = t >= 63 ? UINT64_MAX : std::uint64_t{1} << t;
  for (std::uint64_t bits = 0; bits < combos; ++bits) {
    if (r.winners.size() >= kWinnerCap) {
      r.diagnostics.truncated = true;
      break;
    }
    auto variant = chosen;
    for (std::size_t i = 0; i < t; ++i)
      if (bits >> i & 1U) variant[threshold[i]] = false;
    r.winners.push_back(subset_of(variant, election));
  }
  const bool truncated = r.diagnostics.truncated;
  finalize_winners(r);
  r.diagnostics.truncated = r.diagnostics.truncated || truncated;
  return r;
}

AggregationResult solve_topk_approval(const Election& election, const AggregationSpec& spec) {
  if (!election.k) throw std::invalid_argument("top-k approval requires committee_fixed_k");
  const std::size_t k = *election.k;
  if (k > election.m()) throw std::invalid_argument("k exceeds the number of alternatives");
  const auto counts = approval_counts(election);

  std::vector<std::size_t> order(election.m());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
  std::vector<bool> base(election.m(), false);
  std::vector<std::size_t> tied;
  std::size_t pick = 0;
  if (k > 0) {
    const std::size_t boundary = counts[order[k - 1]];
    for (std::size_t a = 0; a < election.m(); ++a) {
      if (counts[a] > boundary) base[a] = true;
      if (counts[a] == boundary) tied.push_back(a);
    }
    pick = k - static_cast<std::size_t>(std::count(base.begin(), base.end(), true));
  }

  AggregationResult r;
  r.spec = spec;
  r.spec.method = Method::lp;
  r.spec.p = Exponent::finite(1.0);
  std::vector<std::size_t> chosen;
  choose(tied, pick, 0, chosen, [&](const std::vector<std::size_t>& extra) {
    if (r.winners.size() >= kWinnerCap) {
      r.diagnostics.truncated = true;
      return false;
    }
    auto committee = base;
    for (std::size_t a : extra) committee[a] = true;
    if (!r.objective) r.objective = symmetric_difference_total(committee, election);
    r.winners.push_back(subset_of(committee, election));
    return true;
  });
  r.unique = r.winners.size() == 1;
  const bool truncated = r.diagnostics.truncated;
  finalize_winners(r);
  r.diagnostics.truncated = r.diagnostics.truncated || truncated;
  return r;
}

AggregationResult solve_closest_subset(const Election& election, const AggregationSpec& spec) {
  AggregationSpec echo = spec;
  echo.p = Exponent::infinity();
  return exhaustive(election, echo);
}

AggregationResult solve_committee_lp(const Election& election, const AggregationSpec& spec) {
  return exhaustive(election, spec);
}

AggregationResult solve_committee_condorcet(const Election& election, const AggregationSpec& spec) {
  require_committee(election);
  if (election.m() > kCommitteeCondorcetGuard)
    throw GuardExceeded("committee Condorcet tournament: too many alternatives",
                        static_cast<double>(election.m()),
                        static_cast<double>(kCommitteeCondorcetGuard));
  const auto voters = voter_masks(election);
  std::vector<Mask> candidates;
  for_each_candidate(election, [&](Mask x) { candidates.push_back(x); });

  AggregationResult r;
  r.spec = spec;
  r.spec.method = Method::condorcet;
  for (Mask x : candidates) {
    bool wins = true;
    for (Mask y : candidates) {
      if (x == y) continue;
      int pro = 0, con = 0;
      for (Mask v : voters) {
        const int dx = std::popcount(x ^ v), dy = std::popcount(y ^ v);
        pro += dx < dy;
        con += dy < dx;
      }
      if (spec.strict_condorcet ? pro <= con : pro < con) {
        wins = false;
        break;
      }
    }
    if (wins) r.winners.push_back(subset_of(x, election));
  }
  r.unique = r.winners.size() == 1;
  if (r.winners.empty()) r.diagnostics.reason = "no_condorcet_winner";
  finalize_winners(r);
  return r;
}

}  // namespace metricvote
