#include "metricvote/selection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace metricvote {
namespace {

constexpr int kTaylorTerms = 4;

std::vector<std::size_t> argmin_within(const std::vector<std::size_t>& candidates,
                                       const std::function<double(std::size_t)>& score,
                                       double tolerance) {
  std::vector<double> scores;
  scores.reserve(candidates.size());
  double best = INFINITY;
  for (std::size_t c : candidates) {
    scores.push_back(score(c));
    best = std::min(best, scores.back());
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (scores[i] <= best || nearly_equal(scores[i], best, tolerance)) kept.push_back(candidates[i]);
  return kept;
}

double taylor_term(std::span<const double> distances, double p, int k) {
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  double sum = 0.0;
  for (double d : distances) {
    if (d <= 0.0) continue;
    sum += std::pow(d, p) * std::pow(std::log(d), k);
  }
  return sum / factorial;
}

}  // namespace

bool nearly_equal(double a, double b, double tolerance) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tolerance * scale;
}

double lp_objective(std::span<const double> distances, const Exponent& p) {
  if (p.is_infinite()) {
    double worst = 0.0;
    for (double d : distances) worst = std::max(worst, d);
    return worst;
  }
  const double exponent = p.value();
  double sum = 0.0;
  for (double d : distances) sum += exponent == 1.0 ? d : std::pow(d, exponent);
  return sum;
}

Selection select_lp(const DistanceTable& table, const Exponent& p, double tolerance) {
  std::vector<std::size_t> all(table.candidates());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  Selection out;
  if (all.empty()) return out;
  out.winners = argmin_within(all, [&](std::size_t c) { return lp_objective(table.row(c), p); },
                              tolerance);
  out.objective = lp_objective(table.row(out.winners.front()), p);
  return out;
}

Selection select_reduced_lp(const DistanceTable& table, const Exponent& p, double tolerance) {
  if (!p.is_infinite()) {
    const Selection base = select_lp(table, p, tolerance);
    const double exponent = p.value();
    auto refine = [&](double side) {
      auto kept = base.winners;
      for (int k = 1; k <= kTaylorTerms && kept.size() > 1; ++k) {
        const double sign = std::pow(side, k);
        kept = argmin_within(
            kept, [&](std::size_t c) { return sign * taylor_term(table.row(c), exponent, k); },
            tolerance);
      }
      return kept;
    };
    auto winners = refine(+1.0);
    if (exponent > 1.0) {
      const auto below = refine(-1.0);
      winners.insert(winners.end(), below.begin(), below.end());
      std::sort(winners.begin(), winners.end());
      winners.erase(std::unique(winners.begin(), winners.end()), winners.end());
    }
    return {std::move(winners), base.objective};
  }

  // Leximax: compare descending-sorted distance vectors position by position.
  std::vector<std::vector<double>> sorted(table.candidates());
  for (std::size_t c = 0; c < table.candidates(); ++c) {
    auto row = table.row(c);
    sorted[c].assign(row.begin(), row.end());
    std::sort(sorted[c].begin(), sorted[c].end(), std::greater<>());
  }
  std::vector<std::size_t> kept(table.candidates());
  for (std::size_t c = 0; c < kept.size(); ++c) kept[c] = c;
  for (std::size_t pos = 0; pos < table.voters() && kept.size() > 1; ++pos)
    kept = argmin_within(kept, [&](std::size_t c) { return sorted[c][pos]; }, tolerance);
  Selection out;
  out.winners = std::move(kept);
  if (!out.winners.empty()) out.objective = lp_objective(table.row(out.winners.front()), p);
  return out;
}

}  // namespace metricvote
