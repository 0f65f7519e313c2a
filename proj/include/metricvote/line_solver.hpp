#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "metricvote/election.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

/// Outcome domain X of a 1-D election: a closed interval (possibly the whole
/// real line) or a finite set of reals.
class LineDomain {
 public:
  static LineDomain real_line();
  static LineDomain interval(double lo, double hi);
  /// Sorted and deduplicated on construction; must be nonempty.
  static LineDomain points(std::vector<double> points);

  bool convex() const { return !finite_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  /// Finite domains only.
  std::span<const double> finite_points() const { return points_; }
  double clamp(double x) const;
  bool contains(double x, double tolerance = 0.0) const;

 private:
  LineDomain() = default;
  bool finite_ = false;
  double lo_ = -INFINITY;
  double hi_ = INFINITY;
  std::vector<double> points_;
};

class LineElectionView {
 public:
  /// Throws std::invalid_argument on an empty voter list.
  explicit LineElectionView(std::vector<double> values, LineDomain domain = LineDomain::real_line());
  static LineElectionView from_election(const Election& election);

  /// Ascending.
  std::span<const double> values() const { return values_; }
  const LineDomain& domain() const { return domain_; }
  std::size_t n() const { return values_.size(); }

 private:
  std::vector<double> values_;
  LineDomain domain_;
};

/// sum |v_i - x|^p, or max |v_i - x| for p = inf.
double line_objective(std::span<const double> values, double x, const Exponent& p);

/// L_p winners. p = 1: median (even n reports the median interval in
/// diagnostics, representative = reduced point); p = 2: mean; p = inf:
/// midrange; other p: ternary search on [v_1, v_n], polished by bisection on
/// the derivative sign. Finite domains evaluate the domain points bracketing
/// the convex minimizer.
AggregationResult solve_line_lp(const LineElectionView& view, const AggregationSpec& spec);

/// Reduced L_p: for p = 1, the L_{1+eps} minimizer inside the median
/// interval; for p = inf the midrange (the unique L_inf point on convex
/// domains); otherwise the unique L_p point. Non-convex domains fall back to
/// reducing the bracketing candidates and flag it.
AggregationResult reduce_line_lp(const LineElectionView& view, const AggregationSpec& spec);

/// Median-voter winners. Even n with distinct middle values yields the weak
/// winner interval [v_{n/2}, v_{n/2+1}] and no strict winner.
AggregationResult solve_line_condorcet(const LineElectionView& view, const AggregationSpec& spec = {});

enum class Figure1Distribution { consensus_outlier, polarized };

/// L_p winner on [-1, 1] for n-1 voters at 0 and one at 1 (consensus_outlier)
/// or (n-1)/2 voters at -1 and the rest at 1 (polarized). n odd, p > 1.
double figure1_curve(std::size_t n, double p, Figure1Distribution distribution);

}  // namespace metricvote
