#include "metricvote/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "compact.hpp"
#include "metricvote/error.hpp"
#include "metricvote/metrics.hpp"
#include "metricvote/random.hpp"
#include "metricvote/selection.hpp"

namespace metricvote {
namespace detail {

Compact to_compact(const Point& point, const IdIndex& index) {
  auto lookup = [&](const std::string& id) {
    const auto it = index.find(id);
    if (it == index.end()) throw std::invalid_argument("unknown alternative '" + id + "'");
    return it->second;
  };
  Compact out;
  if (const auto* l = std::get_if<Label>(&point)) {
    out.push_back(lookup(l->id));
  } else if (const auto* p = std::get_if<Permutation>(&point)) {
    for (const auto& id : p->order) out.push_back(lookup(id));
  } else if (const auto* s = std::get_if<Subset>(&point)) {
    for (const auto& id : s->members) out.push_back(lookup(id));
    std::sort(out.begin(), out.end());
  } else if (const auto* d = std::get_if<Document>(&point)) {
    for (const auto& id : d->sentences) out.push_back(lookup(id));
  } else {
    throw std::invalid_argument("point has no finite-space encoding");
  }
  return out;
}

Point from_compact(Setting setting, const Compact& compact,
                   const std::vector<std::string>& alternatives) {
  switch (setting) {
    case Setting::plurality: return Label{alternatives.at(compact.at(0))};
    case Setting::ranking: return Permutation{ids_of(compact, alternatives)};
    case Setting::committee:
    case Setting::committee_fixed_k: return make_subset(ids_of(compact, alternatives));
    case Setting::legislation: return Document{ids_of(compact, alternatives)};
    default: throw std::invalid_argument("setting has no finite outcome space");
  }
}

double compact_distance(Setting setting, const Compact& x, const Compact& y, std::size_t ell) {
  switch (setting) {
    case Setting::plurality: return x[0] == y[0] ? 0.0 : 1.0;
    case Setting::ranking: return static_cast<double>(kendall_distance(x, y));
    case Setting::committee:
    case Setting::committee_fixed_k: {
      std::size_t i = 0, j = 0, common = 0;
      while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
          ++common, ++i, ++j;
        } else if (x[i] < y[j]) {
          ++i;
        } else {
          ++j;
        }
      }
      return static_cast<double>(x.size() + y.size() - 2 * common);
    }
    case Setting::legislation: return document_distance(x, y, ell);
    default: throw std::invalid_argument("setting has no finite outcome space");
  }
}

std::vector<Compact> compact_voters(const Election& election) {
  const auto index = alternative_index(election);
  std::vector<Compact> out;
  out.reserve(election.n());
  for (const auto& v : election.voters) out.push_back(to_compact(v, index));
  return out;
}

}  // namespace detail

namespace {

using detail::Compact;

double falling_factorial_sum(std::size_t pool, std::size_t bound) {
  double total = 0.0, term = 1.0;
  for (std::size_t k = 0; k <= std::min(pool, bound); ++k) {
    total += term;
    term *= static_cast<double>(pool - k);
  }
  return total;
}

double binomial(std::size_t m, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(m - k + i) / static_cast<double>(i);
  return std::round(r);
}

void arrangements(std::size_t pool, std::size_t bound, Compact& prefix, std::vector<bool>& used,
                  std::vector<Compact>& out) {
  out.push_back(prefix);
  if (prefix.size() == bound) return;
  for (std::size_t s = 0; s < pool; ++s) {
    if (used[s]) continue;
    used[s] = true;
    prefix.push_back(static_cast<int>(s));
    arrangements(pool, bound, prefix, used, out);
    prefix.pop_back();
    used[s] = false;
  }
}

std::vector<Compact> enumerate_compact(const Election& election, std::size_t length_bound) {
  const std::size_t m = election.m();
  std::vector<Compact> out;
  switch (election.setting) {
    case Setting::plurality:
      for (std::size_t a = 0; a < m; ++a) out.push_back({static_cast<int>(a)});
      break;
    case Setting::ranking: {
      Compact order(m);
      std::iota(order.begin(), order.end(), 0);
      do out.push_back(order); while (std::next_permutation(order.begin(), order.end()));
      break;
    }
    case Setting::committee:
    case Setting::committee_fixed_k:
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (election.k && static_cast<std::size_t>(std::popcount(mask)) != *election.k) continue;
        Compact members;
        for (std::size_t a = 0; a < m; ++a)
          if (mask >> a & 1U) members.push_back(static_cast<int>(a));
        out.push_back(std::move(members));
      }
      break;
    case Setting::legislation: {
      Compact prefix;
      std::vector<bool> used(m, false);
      arrangements(m, length_bound, prefix, used, out);
      break;
    }
    default: throw std::invalid_argument("setting has no finite outcome space");
  }
  return out;
}

double required_space_size(const Election& election, std::size_t length_bound) {
  const std::size_t m = election.m();
  switch (election.setting) {
    case Setting::plurality: return static_cast<double>(m);
    case Setting::ranking: return std::tgamma(static_cast<double>(m) + 1.0);
    case Setting::committee: return std::ldexp(1.0, static_cast<int>(m));
    case Setting::committee_fixed_k: return binomial(m, election.k.value_or(0));
    case Setting::legislation: return falling_factorial_sum(m, length_bound);
    default: throw std::invalid_argument("setting has no finite outcome space");
  }
}

struct CompactSpace {
  std::vector<Compact> points;
  std::vector<Compact> voters;
};

CompactSpace compact_space(const Election& election, const FiniteSpace& space) {
  const auto index = alternative_index(election);
  CompactSpace out;
  out.points.reserve(space.size());
  for (const auto& p : space.points) out.points.push_back(detail::to_compact(p, index));
  out.voters = detail::compact_voters(election);
  return out;
}

DistanceTable distance_table(const Election& election, const FiniteSpace& space,
                             const CompactSpace& compact) {
  DistanceTable table(space.size(), election.n());
  for (std::size_t c = 0; c < space.size(); ++c)
    for (std::size_t v = 0; v < election.n(); ++v)
      table.at(c, v) =
          detail::compact_distance(space.setting, compact.points[c], compact.voters[v], space.ell);
  return table;
}

}  // namespace

FiniteSpace enumerate_space(const Election& election, std::optional<std::size_t> length_bound) {
  if (!is_finite_setting(election.setting))
    throw std::invalid_argument("setting " + std::string(to_string(election.setting)) +
                                " has no finite outcome space");
  const std::size_t bound = length_bound.value_or(election.ell);
  const double required = required_space_size(election, bound);
  if (required > static_cast<double>(kSpaceGuard))
    throw GuardExceeded("outcome space too large to enumerate", required,
                        static_cast<double>(kSpaceGuard));

  FiniteSpace space;
  space.setting = election.setting;
  space.ell = std::max(election.ell, bound);
  for (const auto& c : enumerate_compact(election, bound))
    space.points.push_back(detail::from_compact(election.setting, c, election.alternatives));
  return space;
}

AggregationResult brute_force_lp(const Election& election, const FiniteSpace& space,
                                 const AggregationSpec& spec) {
  if (spec.method == Method::condorcet)
    throw std::invalid_argument("brute_force_lp called with the Condorcet method");
  if (space.size() > kSpaceGuard)
    throw GuardExceeded("outcome space too large", static_cast<double>(space.size()),
                        static_cast<double>(kSpaceGuard));
  const auto compact = compact_space(election, space);
  const auto table = distance_table(election, space, compact);
  const Selection sel = spec.method == Method::reduced_lp
                            ? select_reduced_lp(table, spec.p, spec.tolerance)
                            : select_lp(table, spec.p, spec.tolerance);
  AggregationResult result;
  result.spec = spec;
  result.objective = sel.objective;
  for (std::size_t c : sel.winners) result.winners.push_back(space.points[c]);
  result.unique = result.winners.size() == 1;
  if (space.ell > election.ell)
    result.diagnostics.notes.push_back("document metric evaluated with ell = " +
                                       std::to_string(space.ell));
  finalize_winners(result);
  return result;
}

AggregationResult brute_force_condorcet(const Election& election, const FiniteSpace& space,
                                        bool strict, const AggregationSpec& spec) {
  const double work = static_cast<double>(space.size()) * static_cast<double>(space.size()) *
                      static_cast<double>(election.n());
  if (work > kPairwiseGuard)
    throw GuardExceeded("pairwise Condorcet tournament too large", work, kPairwiseGuard);
  const auto compact = compact_space(election, space);
  const auto table = distance_table(election, space, compact);
  constexpr double kTie = 1e-12;

  AggregationResult result;
  result.spec = spec;
  for (std::size_t x = 0; x < space.size(); ++x) {
    bool beats_all = true;
    for (std::size_t y = 0; y < space.size() && beats_all; ++y) {
      if (y == x) continue;
      int pro = 0, con = 0;
      for (std::size_t v = 0; v < election.n(); ++v) {
        const double dx = table.at(x, v), dy = table.at(y, v);
        if (dx < dy - kTie) {
          ++pro;
        } else if (dy < dx - kTie) {
          ++con;
        }
      }
      beats_all = strict ? pro > con : pro >= con;
    }
    if (beats_all) result.winners.push_back(space.points[x]);
  }
  result.unique = result.winners.size() == 1;
  if (result.winners.empty()) result.diagnostics.reason = "no_condorcet_winner";
  finalize_winners(result);
  return result;
}

double bfs_edit_distance(const Document& x, const Document& y, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("ell must be positive");
  std::map<std::string, int> ids;
  auto encode = [&](const Document& d) {
    Compact out;
    for (const auto& s : d.sentences) out.push_back(ids.emplace(s, static_cast<int>(ids.size())).first->second);
    return out;
  };
  const Compact start = encode(x);
  const Compact goal = encode(y);
  if (start.size() > 5 || goal.size() > 5 || ids.size() > 6)
    throw GuardExceeded("edit-distance search space too large",
                        static_cast<double>(std::max({start.size(), goal.size(), ids.size()})), 6);

  // Integer costs: insert/delete = ell^2, swap = 1.
  const std::int64_t unit = static_cast<std::int64_t>(ell) * static_cast<std::int64_t>(ell);
  using Entry = std::pair<std::int64_t, Compact>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::map<Compact, std::int64_t> best;
  frontier.emplace(0, start);
  best[start] = 0;
  while (!frontier.empty()) {
    auto [cost, state] = frontier.top();
    frontier.pop();
    if (cost > best[state]) continue;
    if (state == goal) return static_cast<double>(cost) / static_cast<double>(unit);
    auto relax = [&](Compact next, std::int64_t step) {
      const std::int64_t c = cost + step;
      auto [it, inserted] = best.emplace(next, c);
      if (inserted || c < it->second) {
        it->second = c;
        frontier.emplace(c, std::move(next));
      }
    };
    for (std::size_t i = 0; i < state.size(); ++i) {
      Compact next = state;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      relax(std::move(next), unit);
    }
    for (int s : goal) {
      if (std::find(state.begin(), state.end(), s) != state.end()) continue;
      for (std::size_t pos = 0; pos <= state.size(); ++pos) {
        Compact next = state;
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(pos), s);
        relax(std::move(next), unit);
      }
    }
    for (std::size_t i = 0; i + 1 < state.size(); ++i) {
      Compact next = state;
      std::swap(next[i], next[i + 1]);
      relax(std::move(next), 1);
    }
  }
  throw std::logic_error("edit-distance search exhausted without reaching the target");
}

std::vector<double> project_onto_simplex(std::span<const double> point) {
  std::vector<double> sorted(point.begin(), point.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - t > 0.0) theta = t;
  }
  std::vector<double> out(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) out[i] = std::max(point[i] - theta, 0.0);
  return out;
}

ContinuousOptimum subgradient_geometric_median(const std::vector<std::vector<double>>& points,
                                               std::size_t starts, std::uint64_t seed,
                                               std::size_t iterations) {
  if (points.empty()) throw std::invalid_argument("no points");
  const std::size_t m = points.front().size();
  auto objective = [&](const std::vector<double>& x) {
    double sum = 0.0;
    for (const auto& v : points) {
      double sq = 0.0;
      for (std::size_t j = 0; j < m; ++j) sq += (x[j] - v[j]) * (x[j] - v[j]);
      sum += std::sqrt(sq);
    }
    return sum;
  };

  Rng rng(seed);
  ContinuousOptimum best{{}, INFINITY};
  for (std::size_t s = 0; s < starts; ++s) {
    std::vector<double> x = rng.dirichlet(m);
    double step0 = 0.5 / static_cast<double>(points.size());
    for (std::size_t k = 0; k < iterations; ++k) {
      const double f = objective(x);
      if (f < best.objective) best = {x, f};
      std::vector<double> g(m, 0.0);
      for (const auto& v : points) {
        double sq = 0.0;
        for (std::size_t j = 0; j < m; ++j) sq += (x[j] - v[j]) * (x[j] - v[j]);
        const double r = std::sqrt(sq);
        if (r < 1e-15) continue;
        for (std::size_t j = 0; j < m; ++j) g[j] += (x[j] - v[j]) / r;
      }
      const double step = step0 / std::sqrt(static_cast<double>(k) + 1.0);
      for (std::size_t j = 0; j < m; ++j) x[j] -= step * g[j];
      x = project_onto_simplex(x);
    }
    const double f = objective(x);
    if (f < best.objective) best = {x, f};
  }
  return best;
}

double line_grid_minimum(std::span<const double> values, const Exponent& p, std::size_t samples) {
  if (values.empty()) throw std::invalid_argument("no values");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  auto objective = [&](double x) {
    std::vector<double> d;
    d.reserve(values.size());
    for (double v : values) d.push_back(std::abs(v - x));
    return lp_objective(d, p);
  };
  double best = INFINITY;
  for (double v : values) best = std::min(best, objective(v));
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = samples == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    best = std::min(best, objective(x));
  }
  return best;
}

}  // namespace metricvote
