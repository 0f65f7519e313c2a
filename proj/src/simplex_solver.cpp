#include "metricvote/simplex_solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "metricvote/line_solver.hpp"
#include "metricvote/random.hpp"

namespace metricvote {
namespace {

constexpr double kRankTolerance = 1e-9;
constexpr double kVertexTolerance = 1e-12;
constexpr double kWeiszfeldStep = 1e-10;
constexpr double kWeiszfeldImprovement = 1e-12;
constexpr std::size_t kSupportCandidates = 10;
constexpr double kFalsifierRadii[] = {1e-3, 1e-2, 1e-1};

Simplex to_simplex(const Eigen::VectorXd& x) {
  std::vector<double> w(x.data(), x.data() + x.size());
  for (double& wi : w)
    if (wi < 0.0 && wi > -1e-12) wi = 0.0;
  return Simplex{std::move(w)};
}

[[maybe_unused]] bool feasible(const Eigen::VectorXd& x) {
  return x.minCoeff() >= -1e-9 && std::abs(x.sum() - 1.0) <= 1e-9;
}

AggregationResult point_result(const SimplexInstance& instance, const AggregationSpec& spec,
                               const Eigen::VectorXd& x, bool unique) {
  assert(feasible(x));
  AggregationResult r;
  r.spec = spec;
  r.winners.push_back(to_simplex(x));
  r.unique = unique;
  if (spec.method != Method::condorcet) r.objective = simplex_objective(instance, x, spec.p);
  return r;
}

struct LineEmbedding {
  Eigen::VectorXd origin;
  Eigen::VectorXd direction;  // unit, or zero when all points coincide
  std::vector<double> coordinates;
};

LineEmbedding embed_on_line(const SimplexInstance& instance) {
  const auto& pts = instance.points();
  LineEmbedding e;
  e.origin = pts.rowwise().mean();
  const Eigen::MatrixXd centered = pts.colwise() - e.origin;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU);
  if (svd.singularValues().size() > 0 && svd.singularValues()(0) > kRankTolerance) {
    e.direction = svd.matrixU().col(0);
  } else {
    e.direction = Eigen::VectorXd::Zero(pts.rows());
  }
  for (Eigen::Index i = 0; i < pts.cols(); ++i)
    e.coordinates.push_back(e.direction.dot(pts.col(i) - e.origin));
  return e;
}

AggregationResult solve_collinear(const SimplexInstance& instance, const AggregationSpec& spec) {
  const LineEmbedding e = embed_on_line(instance);
  const LineElectionView view(e.coordinates);
  AggregationResult line;
  switch (spec.method) {
    case Method::lp: line = solve_line_lp(view, spec); break;
    case Method::reduced_lp: line = reduce_line_lp(view, spec); break;
    case Method::condorcet: line = solve_line_condorcet(view, spec); break;
  }
  AggregationResult r;
  r.spec = spec;
  r.diagnostics = line.diagnostics;
  r.diagnostics.notes.push_back("collinear voters: solved along their common line");
  if (!line.has_winner()) return r;
  const double t = std::get<Real>(line.representative()).value;
  Eigen::VectorXd x = e.origin + t * e.direction;
  // A winner at a voter's coordinate is that voter's point, without the round trip.
  for (std::size_t i = 0; i < e.coordinates.size(); ++i)
    if (e.coordinates[i] == t) {
      x = instance.points().col(static_cast<Eigen::Index>(i));
      break;
    }
  r.winners.push_back(to_simplex(x));
  r.unique = line.unique;
  if (spec.method != Method::condorcet) r.objective = simplex_objective(instance, x, spec.p);
  return r;
}

struct IterativeOutcome {
  Eigen::VectorXd x;
  std::size_t iterations = 0;
  bool converged = false;
};

IterativeOutcome weiszfeld(const SimplexInstance& instance, const AggregationSpec& spec) {
  const auto& pts = instance.points();
  const Exponent one = Exponent::finite(1.0);
  IterativeOutcome out;
  // Iterates crawl toward a data-point optimum, so test the data points first.
  for (Eigen::Index k = 0; k < pts.cols(); ++k) {
    Eigen::VectorXd residual = Eigen::VectorXd::Zero(pts.rows());
    double multiplicity = 0.0;
    for (Eigen::Index i = 0; i < pts.cols(); ++i) {
      const Eigen::VectorXd diff = pts.col(i) - pts.col(k);
      const double r = diff.norm();
      if (r < kVertexTolerance) multiplicity += 1.0;
      else residual += diff / r;
    }
    if (residual.norm() <= multiplicity) {
      out.x = pts.col(k);
      out.converged = true;
      return out;
    }
  }
  out.x = pts.rowwise().mean();
  double f = simplex_objective(instance, out.x, one);
  for (; out.iterations < spec.max_iterations; ++out.iterations) {
    Eigen::VectorXd residual = Eigen::VectorXd::Zero(pts.rows());
    Eigen::VectorXd weighted = Eigen::VectorXd::Zero(pts.rows());
    double weight = 0.0;
    double multiplicity = 0.0;
    Eigen::Index coincident = -1;
    for (Eigen::Index i = 0; i < pts.cols(); ++i) {
      const Eigen::VectorXd diff = pts.col(i) - out.x;
      const double r = diff.norm();
      if (r < kVertexTolerance) {
        multiplicity += 1.0;
        coincident = i;
        continue;
      }
      residual += diff / r;
      weighted += pts.col(i) / r;
      weight += 1.0 / r;
    }
    if (weight == 0.0) {
      out.converged = true;
      break;
    }
    const Eigen::VectorXd mapped = weighted / weight;
    Eigen::VectorXd next;
    if (multiplicity > 0.0) {
      const double pull = residual.norm();
      if (pull <= multiplicity) {
        // Subgradient optimality holds at the data point.
        out.x = pts.col(coincident);
        out.converged = true;
        break;
      }
      const double keep = multiplicity / pull;
      next = (1.0 - keep) * mapped + keep * out.x;
    } else {
      next = mapped;
    }
    const double step = (next - out.x).norm();
    const double f_next = simplex_objective(instance, next, one);
    const double improvement = f - f_next;
    out.x = next;
    f = f_next;
    if (step < kWeiszfeldStep || (improvement >= 0.0 && improvement < kWeiszfeldImprovement)) {
      out.converged = true;
      ++out.iterations;
      break;
    }
  }
  return out;
}

/// Circumcenter of the given columns within their affine hull; false when
/// the points are affinely dependent.
bool circumcenter(const Eigen::MatrixXd& pts, const std::vector<Eigen::Index>& support,
                  Eigen::VectorXd& center) {
  const Eigen::VectorXd base = pts.col(support.front());
  if (support.size() == 1) {
    center = base;
    return true;
  }
  const auto k = static_cast<Eigen::Index>(support.size() - 1);
  Eigen::MatrixXd a(pts.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) a.col(j) = pts.col(support[j + 1]) - base;
  const Eigen::MatrixXd gram = 2.0 * a.transpose() * a;
  Eigen::VectorXd rhs(k);
  for (Eigen::Index j = 0; j < k; ++j) rhs(j) = a.col(j).squaredNorm();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (lu.rank() < k) return false;
  center = base + a * lu.solve(rhs);
  return true;
}

void subsets_up_to(std::size_t size, std::size_t start, const std::vector<Eigen::Index>& pool,
                   std::vector<Eigen::Index>& chosen,
                   const std::function<void(const std::vector<Eigen::Index>&)>& visit) {
  if (!chosen.empty()) visit(chosen);
  if (chosen.size() == size) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    chosen.push_back(pool[i]);
    subsets_up_to(size, i + 1, pool, chosen, visit);
    chosen.pop_back();
  }
}

IterativeOutcome min_enclosing_ball(const SimplexInstance& instance, const AggregationSpec& spec) {
  const auto& pts = instance.points();
  IterativeOutcome out;
  out.x = pts.col(0);
  for (std::size_t k = 1; k <= spec.max_iterations; ++k) {
    Eigen::Index far = 0;
    (pts.colwise() - out.x).colwise().squaredNorm().maxCoeff(&far);
    out.x += (pts.col(far) - out.x) / static_cast<double>(k + 1);
    out.iterations = k;
  }

  // Exact refinement: the smallest enclosing circumball of a small subset of
  // the points farthest from the approximate center.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(pts.cols()));
  std::iota(order.begin(), order.end(), 0);
  const Eigen::VectorXd dist = (pts.colwise() - out.x).colwise().norm();
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return dist(a) > dist(b); });
  std::vector<Eigen::Index> pool;
  for (Eigen::Index i : order) {
    const bool duplicate = std::any_of(pool.begin(), pool.end(), [&](Eigen::Index j) {
      return (pts.col(i) - pts.col(j)).norm() < kVertexTolerance;
    });
    if (!duplicate) pool.push_back(i);
    if (pool.size() == kSupportCandidates) break;
  }
  double best_radius = dist.maxCoeff();
  bool exact = false;
  std::vector<Eigen::Index> chosen;
  subsets_up_to(std::min(pool.size(), instance.dimension()), 0, pool, chosen,
                [&](const std::vector<Eigen::Index>& support) {
                  Eigen::VectorXd c;
                  if (!circumcenter(pts, support, c)) return;
                  const double radius = (pts.col(support.front()) - c).norm();
                  const double reach = (pts.colwise() - c).colwise().norm().maxCoeff();
                  if (reach > radius + 1e-12 * std::max(1.0, radius)) return;
                  if (reach <= best_radius + 1e-12) {
                    best_radius = reach;
                    out.x = c;
                    exact = true;
                  }
                });
  out.converged = exact;
  return out;
}

IterativeOutcome gradient_descent(const SimplexInstance& instance, double p,
                                  const AggregationSpec& spec) {
  const Exponent exponent = Exponent::finite(p);
  IterativeOutcome out;
  out.x = instance.points().rowwise().mean();
  double f = simplex_objective(instance, out.x, exponent);
  double step = 1.0;
  for (; out.iterations < spec.max_iterations; ++out.iterations) {
    const Eigen::VectorXd g = simplex_objective_gradient(instance, out.x, p);
    const double g2 = g.squaredNorm();
    if (g2 < 1e-30) {
      out.converged = true;
      break;
    }
    step *= 2.0;
    Eigen::VectorXd next;
    double f_next;
    for (;;) {
      next = out.x - step * g;
      f_next = simplex_objective(instance, next, exponent);
      if (f_next <= f - 0.5 * step * g2 || step < 1e-300) break;
      step *= 0.5;
    }
    const double improvement = f - f_next;
    const double moved = (next - out.x).norm();
    if (improvement < 0.0) {
      out.converged = true;
      break;
    }
    out.x = next;
    f = f_next;
    if (moved < 1e-13 || improvement <= 1e-16 * std::max(1.0, f)) {
      out.converged = true;
      ++out.iterations;
      break;
    }
  }
  return out;
}

}  // namespace

SimplexInstance::SimplexInstance(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw std::invalid_argument("simplex instance has no points");
  const std::size_t m = points.front().size();
  points_.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != m) throw std::invalid_argument("simplex dimension mismatch");
    for (std::size_t j = 0; j < m; ++j)
      points_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = points[i][j];
  }
  const Eigen::MatrixXd centered = points_.colwise() - points_.rowwise().mean();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
  const auto& sv = svd.singularValues();
  const auto rank = std::count_if(sv.data(), sv.data() + sv.size(),
                                  [](double s) { return s > kRankTolerance; });
  collinear_ = rank <= 1;
}

SimplexInstance SimplexInstance::from_election(const Election& election) {
  std::vector<std::vector<double>> pts;
  pts.reserve(election.n());
  for (const auto& v : election.voters) pts.push_back(std::get<Simplex>(v).weights);
  return SimplexInstance(pts);
}

double simplex_objective(const SimplexInstance& instance, const Eigen::VectorXd& x, const Exponent& p) {
  const Eigen::VectorXd d = (instance.points().colwise() - x).colwise().norm();
  if (p.is_infinite()) return d.maxCoeff();
  const double q = p.value();
  if (q == 1.0) return d.sum();
  if (q == 2.0) return d.squaredNorm();
  return d.array().pow(q).sum();
}

Eigen::VectorXd simplex_objective_gradient(const SimplexInstance& instance, const Eigen::VectorXd& x,
                                           double p) {
  const auto& pts = instance.points();
  Eigen::VectorXd g = Eigen::VectorXd::Zero(pts.rows());
  for (Eigen::Index i = 0; i < pts.cols(); ++i) {
    const Eigen::VectorXd diff = x - pts.col(i);
    const double r = diff.norm();
    if (r < 1e-300) continue;
    g += p * std::pow(r, p - 2.0) * diff;
  }
  return g;
}

AggregationResult solve_simplex_lp(const SimplexInstance& instance, const AggregationSpec& spec) {
  spec.validate();
  if (instance.collinear()) return solve_collinear(instance, spec);

  if (!spec.p.is_infinite() && spec.p.value() == 2.0)
    return point_result(instance, spec, instance.points().rowwise().mean(), true);

  IterativeOutcome found;
  if (spec.p.is_one()) {
    found = weiszfeld(instance, spec);
  } else if (spec.p.is_infinite()) {
    found = min_enclosing_ball(instance, spec);
  } else {
    found = gradient_descent(instance, spec.p.value(), spec);
  }
  auto r = point_result(instance, spec, found.x, true);
  r.diagnostics.iterations = found.iterations;
  r.diagnostics.converged = found.converged;
  return r;
}

AggregationResult falsify_condorcet_simplex(const SimplexInstance& instance, const Simplex& candidate,
                                            const AggregationSpec& spec) {
  const auto m = static_cast<Eigen::Index>(instance.dimension());
  if (static_cast<Eigen::Index>(candidate.weights.size()) != m)
    throw std::invalid_argument("candidate dimension mismatch");
  const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(candidate.weights.data(), m);
  const Eigen::VectorXd to_candidate = (instance.points().colwise() - c).colwise().norm();

  AggregationSpec echo = spec;
  echo.method = Method::condorcet;
  AggregationResult r;
  r.spec = echo;
  Rng rng(spec.seed);
  for (std::size_t trial = 0; trial < spec.falsifier_trials; ++trial) {
    Eigen::VectorXd y;
    const std::size_t kind = trial % 4;
    if (kind == 0) {
      const auto sample = rng.dirichlet(static_cast<std::size_t>(m));
      y = Eigen::Map<const Eigen::VectorXd>(sample.data(), m);
    } else {
      Eigen::VectorXd dir(m);
      for (Eigen::Index j = 0; j < m; ++j) dir(j) = rng.normal();
      dir.array() -= dir.mean();
      if (dir.norm() == 0.0) continue;
      dir.normalize();
      double radius = kFalsifierRadii[kind - 1];
      for (Eigen::Index j = 0; j < m; ++j)
        if (dir(j) < 0.0) radius = std::min(radius, c(j) / -dir(j));
      if (radius <= 0.0) continue;
      y = c + radius * dir;
    }
    const Eigen::VectorXd to_challenger = (instance.points().colwise() - y).colwise().norm();
    int prefer_challenger = 0, prefer_candidate = 0;
    for (Eigen::Index i = 0; i < to_candidate.size(); ++i) {
      prefer_challenger += to_challenger(i) < to_candidate(i);
      prefer_candidate += to_candidate(i) < to_challenger(i);
    }
    const bool beaten = spec.strict_condorcet ? prefer_challenger >= prefer_candidate
                                              : prefer_challenger > prefer_candidate;
    if (beaten) {
      r.witness = to_simplex(y);
      r.diagnostics.iterations = trial + 1;
      r.diagnostics.reason = "falsified";
      return r;
    }
  }
  r.winners.push_back(candidate);
  r.diagnostics.iterations = spec.falsifier_trials;
  r.diagnostics.reason = "not_falsified";
  r.diagnostics.notes.push_back("no challenger beat the candidate in " +
                                std::to_string(spec.falsifier_trials) +
                                " trials; this does not certify a Condorcet winner");
  return r;
}

AggregationResult solve_simplex_condorcet(const SimplexInstance& instance, const AggregationSpec& spec) {
  AggregationSpec echo = spec;
  echo.method = Method::condorcet;
  if (instance.collinear()) return solve_collinear(instance, echo);

  const auto& pts = instance.points();
  Eigen::VectorXd candidate;
  for (Eigen::Index i = 0; i < pts.cols() && candidate.size() == 0; ++i) {
    std::size_t count = 0;
    for (Eigen::Index j = 0; j < pts.cols(); ++j)
      count += (pts.col(i) - pts.col(j)).norm() < kVertexTolerance;
    if (2 * count >= instance.n()) candidate = pts.col(i);
  }
  if (candidate.size() == 0) {
    AggregationSpec median = spec;
    median.method = Method::lp;
    median.p = Exponent::finite(1.0);
    const auto w = std::get<Simplex>(solve_simplex_lp(instance, median).representative()).weights;
    candidate = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
  }
  return falsify_condorcet_simplex(instance, to_simplex(candidate), echo);
}

}  // namespace metricvote
