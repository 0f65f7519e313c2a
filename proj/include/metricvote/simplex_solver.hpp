#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "metricvote/election.hpp"
#include "metricvote/spec.hpp"

namespace metricvote {

/// Budget proposals as columns of an m x n matrix.
class SimplexInstance {
 public:
  /// Throws std::invalid_argument on an empty or ragged point list.
  explicit SimplexInstance(const std::vector<std::vector<double>>& points);
  static SimplexInstance from_election(const Election& election);

  std::size_t dimension() const { return static_cast<std::size_t>(points_.rows()); }
  std::size_t n() const { return static_cast<std::size_t>(points_.cols()); }
  const Eigen::MatrixXd& points() const { return points_; }
  /// All points on one line: rank of the centered point matrix <= 1 (1e-9).
  bool collinear() const { return collinear_; }

 private:
  Eigen::MatrixXd points_;
  bool collinear_ = false;
};

/// sum ||x - v_i||^p, or max ||x - v_i|| for p = inf.
double simplex_objective(const SimplexInstance& instance, const Eigen::VectorXd& x, const Exponent& p);

/// Gradient of sum ||x - v_i||^p for finite p; terms with x = v_i are
/// skipped (their limit is 0 for p > 1).
Eigen::VectorXd simplex_objective_gradient(const SimplexInstance& instance, const Eigen::VectorXd& x,
                                           double p);

/// L_p aggregation over the simplex. p = 2: coordinate mean; p = 1:
/// geometric median (Weiszfeld with the Vardi-Zhang vertex rule); p = inf:
/// minimum enclosing ball (Badoiu-Clarkson iterations, then an exact search
/// over small support sets); other p: gradient descent with backtracking.
/// Collinear instances are solved on their common line.
AggregationResult solve_simplex_lp(const SimplexInstance& instance, const AggregationSpec& spec);

/// Randomized one-sided Condorcet check: draws spec.falsifier_trials
/// challengers (Dirichlet samples and perturbations of the candidate at radii
/// 1e-3, 1e-2, 1e-1) and reports the first one that beats it: ties count as
/// a loss under strict comparison. Never certifies a winner.
AggregationResult falsify_condorcet_simplex(const SimplexInstance& instance, const Simplex& candidate,
                                            const AggregationSpec& spec);

/// Condorcet aggregation over the simplex: exact on collinear instances (the
/// line median), otherwise the falsifier applied to the natural candidate (a
/// point held by at least half the voters, else the geometric median).
AggregationResult solve_simplex_condorcet(const SimplexInstance& instance, const AggregationSpec& spec);

}  // namespace metricvote
