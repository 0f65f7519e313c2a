#include "metricvote/line_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "metricvote/error.hpp"
#include "metricvote/oracle.hpp"
#include "metricvote/selection.hpp"

namespace metricvote {
namespace {

constexpr int kTernaryIterations = 200;
constexpr int kBisectionIterations = 200;

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

/// Sign of d/dx sum |v_i - x|^q for q > 1, with distances scaled by the
/// voter range so large q does not overflow.
double derivative_sign_term(std::span<const double> values, double x, double q, double scale) {
  double sum = 0.0;
  for (double v : values) {
    const double d = (x - v) / scale;
    if (d == 0.0) continue;
    sum += (d > 0 ? 1.0 : -1.0) * std::pow(std::abs(d), q - 1.0);
  }
  return sum;
}

/// Minimizer of the strictly convex sum |v_i - x|^q over [lo, hi], q > 1.
struct ConvexMinimum {
  double x;
  std::size_t iterations;
};

ConvexMinimum minimize_power_sum(std::span<const double> values, double q, double lo, double hi,
                                 double tolerance) {
  const double scale = std::max(values.back() - values.front(), 1e-300);
  const Exponent p = Exponent::finite(q);
  auto f = [&](double x) { return line_objective(values, x, p); };
  std::size_t iterations = 0;

  double a = lo, b = hi;
  for (int it = 0; it < kTernaryIterations && b - a > tolerance * std::max(1.0, scale); ++it) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (f(m1) < f(m2)) {
      b = m2;
    } else {
      a = m1;
    }
    ++iterations;
  }

  // Ternary search stalls once f(m1) and f(m2) round to the same value; the
  // derivative is continuous for q > 1, so finish by bisecting its sign.
  auto g = [&](double x) { return derivative_sign_term(values, x, q, scale); };
  double left = a, right = b;
  if (!(g(left) <= 0.0 && g(right) >= 0.0)) {
    left = lo;
    right = hi;
  }
  if (g(left) >= 0.0) return {left, iterations};
  if (g(right) <= 0.0) return {right, iterations};
  for (int it = 0; it < kBisectionIterations; ++it) {
    const double mid = left + (right - left) / 2.0;
    if (mid <= left || mid >= right) break;
    if (g(mid) < 0.0) {
      left = mid;
    } else {
      right = mid;
    }
    ++iterations;
  }
  return {left + (right - left) / 2.0, iterations};
}

AggregationResult single_real(const LineElectionView& view, const AggregationSpec& spec, double x,
                              bool unique) {
  AggregationResult r;
  r.spec = spec;
  r.winners.push_back(Real{x});
  r.unique = unique;
  if (spec.method != Method::condorcet) r.objective = line_objective(view.values(), x, spec.p);
  return r;
}

/// Finite domains: the L_p minimizers lie among domain points inside
/// [lo, hi] or the nearest domain points outside it.
AggregationResult finite_domain_lp(const LineElectionView& view, const AggregationSpec& spec,
                                   double lo, double hi) {
  const auto pts = view.domain().finite_points();
  std::vector<double> candidates;
  for (double x : pts)
    if (x >= lo && x <= hi) candidates.push_back(x);
  const auto below = std::upper_bound(pts.begin(), pts.end(), lo);
  if (below != pts.begin()) candidates.push_back(*std::prev(below));
  const auto above = std::lower_bound(pts.begin(), pts.end(), hi);
  if (above != pts.end()) candidates.push_back(*above);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  DistanceTable table(candidates.size(), view.n());
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (std::size_t i = 0; i < view.n(); ++i)
      table.at(c, i) = std::abs(view.values()[i] - candidates[c]);
  const Selection sel = spec.method == Method::reduced_lp
                            ? select_reduced_lp(table, spec.p, spec.tolerance)
                            : select_lp(table, spec.p, spec.tolerance);
  AggregationResult r;
  r.spec = spec;
  r.objective = sel.objective;
  for (std::size_t c : sel.winners) r.winners.push_back(Real{candidates[c]});
  r.unique = r.winners.size() == 1;
  finalize_winners(r);
  return r;
}

double reduced_median_point(std::span<const double> values, double lo, double hi, double eps,
                            double tolerance) {
  return std::clamp(minimize_power_sum(values, 1.0 + eps, lo, hi, tolerance).x, lo, hi);
}

std::pair<double, double> median_interval(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n % 2 == 1) return {v[n / 2], v[n / 2]};
  return {v[n / 2 - 1], v[n / 2]};
}

}  // namespace

LineDomain LineDomain::real_line() { return LineDomain(); }

LineDomain LineDomain::interval(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("empty line interval");
  LineDomain d;
  d.lo_ = lo;
  d.hi_ = hi;
  return d;
}

LineDomain LineDomain::points(std::vector<double> points) {
  if (points.empty()) throw std::invalid_argument("empty finite line domain");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LineDomain d;
  d.finite_ = true;
  d.lo_ = points.front();
  d.hi_ = points.back();
  d.points_ = std::move(points);
  return d;
}

double LineDomain::clamp(double x) const { return std::clamp(x, lo_, hi_); }

bool LineDomain::contains(double x, double tolerance) const {
  if (!finite_) return x >= lo_ - tolerance && x <= hi_ + tolerance;
  return std::any_of(points_.begin(), points_.end(),
                     [&](double p) { return std::abs(p - x) <= tolerance; });
}

LineElectionView::LineElectionView(std::vector<double> values, LineDomain domain)
    : values_(std::move(values)), domain_(std::move(domain)) {
  if (values_.empty()) throw std::invalid_argument("line election has no voters");
  std::sort(values_.begin(), values_.end());
}

LineElectionView LineElectionView::from_election(const Election& election) {
  std::vector<double> values;
  values.reserve(election.n());
  for (const auto& v : election.voters) values.push_back(std::get<Real>(v).value);
  return LineElectionView(std::move(values));
}

double line_objective(std::span<const double> values, double x, const Exponent& p) {
  if (p.is_infinite()) {
    double worst = 0.0;
    for (double v : values) worst = std::max(worst, std::abs(v - x));
    return worst;
  }
  const double q = p.value();
  double sum = 0.0;
  for (double v : values) sum += q == 1.0 ? std::abs(v - x) : std::pow(std::abs(v - x), q);
  return sum;
}

AggregationResult solve_line_lp(const LineElectionView& view, const AggregationSpec& spec) {
  spec.validate();
  const auto v = view.values();
  const LineDomain& domain = view.domain();

  if (spec.p.is_one()) {
    const auto [lo, hi] = median_interval(v);
    if (!domain.convex()) return finite_domain_lp(view, spec, lo, hi);
    const double clo = domain.clamp(lo), chi = domain.clamp(hi);
    if (clo == chi) return single_real(view, spec, clo, true);
    const double rep = reduced_median_point(v, clo, chi, spec.reduced_epsilon, spec.tolerance);
    auto r = single_real(view, spec, rep, false);
    r.diagnostics.interval = {clo, chi};
    r.diagnostics.notes.push_back("even n: every point of the median interval is an L_1 winner");
    return r;
  }

  double x;
  std::size_t iterations = 0;
  if (spec.p.is_infinite()) {
    x = (v.front() + v.back()) / 2.0;
  } else if (spec.p.value() == 2.0) {
    x = mean_of(v);
  } else {
    const auto found = minimize_power_sum(v, spec.p.value(), v.front(), v.back(), spec.tolerance);
    x = found.x;
    iterations = found.iterations;
  }
  if (!domain.convex()) return finite_domain_lp(view, spec, x, x);
  auto r = single_real(view, spec, domain.clamp(x), true);
  r.diagnostics.iterations = iterations;
  return r;
}

AggregationResult reduce_line_lp(const LineElectionView& view, const AggregationSpec& spec) {
  spec.validate();
  AggregationSpec reduced = spec;
  reduced.method = Method::reduced_lp;
  const auto v = view.values();
  if (!view.domain().convex()) {
    AggregationResult r;
    if (spec.p.is_one()) {
      const auto [lo, hi] = median_interval(v);
      r = finite_domain_lp(view, reduced, lo, hi);
    } else {
      AggregationSpec plain = reduced;
      plain.method = Method::lp;
      const LineElectionView hull(std::vector<double>(v.begin(), v.end()));
      const double x = std::get<Real>(solve_line_lp(hull, plain).representative()).value;
      r = finite_domain_lp(view, reduced, x, x);
    }
    r.diagnostics.notes.push_back("non-convex domain: reduced among bracketing domain points");
    return r;
  }

  if (spec.p.is_one()) {
    const auto [lo, hi] = median_interval(v);
    const double clo = view.domain().clamp(lo), chi = view.domain().clamp(hi);
    const double x = clo == chi ? clo
                                : reduced_median_point(v, clo, chi, spec.reduced_epsilon,
                                                       spec.tolerance);
    auto r = single_real(view, reduced, x, true);
    r.objective = line_objective(v, x, spec.p);
    return r;
  }
  auto r = solve_line_lp(view, reduced);
  r.spec = reduced;
  return r;
}

AggregationResult solve_line_condorcet(const LineElectionView& view, const AggregationSpec& spec) {
  const auto v = view.values();
  const LineDomain& domain = view.domain();
  AggregationSpec echo = spec;
  echo.method = Method::condorcet;

  if (!domain.convex()) {
    const auto pts = domain.finite_points();
    const double work = static_cast<double>(pts.size()) * static_cast<double>(pts.size()) *
                        static_cast<double>(v.size());
    if (work > kPairwiseGuard)
      throw GuardExceeded("pairwise Condorcet tournament too large", work, kPairwiseGuard);
    AggregationResult r;
    r.spec = echo;
    for (double x : pts) {
      bool beats_all = true;
      for (double y : pts) {
        if (y == x) continue;
        int pro = 0, con = 0;
        for (double vi : v) {
          const double dx = std::abs(vi - x), dy = std::abs(vi - y);
          pro += dx < dy;
          con += dy < dx;
        }
        if (spec.strict_condorcet ? pro <= con : pro < con) {
          beats_all = false;
          break;
        }
      }
      if (beats_all) r.winners.push_back(Real{x});
    }
    r.unique = r.winners.size() == 1;
    if (r.winners.empty()) r.diagnostics.reason = "no_condorcet_winner";
    finalize_winners(r);
    return r;
  }

  const auto [lo, hi] = median_interval(v);
  const double clo = domain.clamp(lo), chi = domain.clamp(hi);
  if (clo == chi) {
    // A clamped interval collapses onto the domain endpoint nearest the median voters.
    return single_real(view, echo, clo, true);
  }
  if (spec.strict_condorcet) {
    AggregationResult r;
    r.spec = echo;
    r.diagnostics.reason = "no_strict_condorcet_winner";
    r.diagnostics.interval = {clo, chi};
    return r;
  }
  const double rep = spec.tie_break == TieBreak::lexicographic ? clo : (clo + chi) / 2.0;
  auto r = single_real(view, echo, rep, false);
  r.diagnostics.interval = {clo, chi};
  r.diagnostics.notes.push_back("even n: every point of the interval is a weak Condorcet winner");
  return r;
}

double figure1_curve(std::size_t n, double p, Figure1Distribution distribution) {
  if (n % 2 == 0) throw std::invalid_argument("figure1_curve requires odd n");
  if (!(p > 1.0)) throw std::invalid_argument("figure1_curve requires p > 1");
  std::vector<double> values;
  if (distribution == Figure1Distribution::consensus_outlier) {
    values.assign(n - 1, 0.0);
    values.push_back(1.0);
  } else {
    values.assign((n - 1) / 2, -1.0);
    values.resize(n, 1.0);
  }
  AggregationSpec spec;
  spec.p = Exponent::finite(p);
  spec.tolerance = 1e-12;
  const auto result =
      solve_line_lp(LineElectionView(std::move(values), LineDomain::interval(-1.0, 1.0)), spec);
  return std::get<Real>(result.representative()).value;
}

}  // namespace metricvote
