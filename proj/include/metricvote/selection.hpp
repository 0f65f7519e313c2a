#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "metricvote/spec.hpp"

namespace metricvote {

/// Sum of d^p, or max d for p = inf.
double lp_objective(std::span<const double> distances, const Exponent& p);

/// Row-major candidate x voter distance table.
class DistanceTable {
 public:
  DistanceTable(std::size_t candidates, std::size_t voters)
      : candidates_(candidates), voters_(voters), data_(candidates * voters, 0.0) {}

  std::size_t candidates() const { return candidates_; }
  std::size_t voters() const { return voters_; }
  double& at(std::size_t c, std::size_t v) { return data_[c * voters_ + v]; }
  double at(std::size_t c, std::size_t v) const { return data_[c * voters_ + v]; }
  std::span<const double> row(std::size_t c) const {
    return {data_.data() + c * voters_, voters_};
  }

 private:
  std::size_t candidates_;
  std::size_t voters_;
  std::vector<double> data_;
};

struct Selection {
  std::vector<std::size_t> winners;  // ascending candidate indices
  double objective = 0.0;
};

/// Exact argmin of the L_p objective over the table's candidates; ties
/// within a relative `tolerance` are kept.
Selection select_lp(const DistanceTable& table, const Exponent& p, double tolerance);

/// Reduced L_p: the candidates that remain L_q minimizers as q -> p.
///
/// Finite p: the L_p winners are refined lexicographically by the Taylor
/// coefficients of sum d^q around q = p (terms sum d^p ln^k d / k!, k = 1..4),
/// once for q -> p+ and, when p > 1, once for q -> p- (alternating signs);
/// the union of both survivors is returned.
/// p = inf: leximax, i.e. lexicographic minimization of the distance vector
/// sorted in decreasing order.
Selection select_reduced_lp(const DistanceTable& table, const Exponent& p, double tolerance);

/// True when |a - b| <= tolerance * max(1, |a|, |b|).
bool nearly_equal(double a, double b, double tolerance);

}  // namespace metricvote
