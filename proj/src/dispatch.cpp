#include "metricvote/dispatch.hpp"

#include <stdexcept>

#include "metricvote/committee_solver.hpp"
#include "metricvote/legislation.hpp"
#include "metricvote/line_solver.hpp"
#include "metricvote/plurality_solver.hpp"
#include "metricvote/ranking_solver.hpp"
#include "metricvote/simplex_solver.hpp"

namespace metricvote {
namespace {

AggregationResult solve_ranking(const Election& election, const AggregationSpec& spec) {
  if (spec.method == Method::condorcet) return solve_ranking_condorcet(election, spec);
  if (spec.method == Method::lp && spec.p.is_one())
    return election.m() <= kKemenyGuard ? solve_kemeny(election, spec)
                                        : kemeny_local_search(election, spec);
  if (spec.method == Method::lp && spec.p.is_infinite())
    return solve_center_permutation(election, spec);
  return solve_ranking_lp(election, spec);
}

AggregationResult solve_committee(const Election& election, const AggregationSpec& spec) {
  if (spec.method == Method::condorcet) return solve_committee_condorcet(election, spec);
  if (spec.method == Method::lp && spec.p.is_one())
    return election.k ? solve_topk_approval(election, spec) : solve_median_element(election, spec);
  if (spec.method == Method::lp && spec.p.is_infinite()) return solve_closest_subset(election, spec);
  return solve_committee_lp(election, spec);
}

}  // namespace

AggregationResult solve(const Election& election, const AggregationSpec& spec) {
  spec.validate();
  switch (election.setting) {
    case Setting::plurality:
      return spec.method == Method::condorcet ? solve_plurality_condorcet(election, spec)
                                              : solve_plurality_lp(election, spec);
    case Setting::line: {
      const auto view = LineElectionView::from_election(election);
      switch (spec.method) {
        case Method::condorcet: return solve_line_condorcet(view, spec);
        case Method::lp: return solve_line_lp(view, spec);
        case Method::reduced_lp: return reduce_line_lp(view, spec);
      }
      break;
    }
    case Setting::budget: {
      const auto instance = SimplexInstance::from_election(election);
      return spec.method == Method::condorcet ? solve_simplex_condorcet(instance, spec)
                                              : solve_simplex_lp(instance, spec);
    }
    case Setting::ranking: return solve_ranking(election, spec);
    case Setting::committee:
    case Setting::committee_fixed_k: return solve_committee(election, spec);
    case Setting::legislation: return solve_legislation(election, spec);
  }
  throw std::logic_error("unhandled setting");
}

}  // namespace metricvote
