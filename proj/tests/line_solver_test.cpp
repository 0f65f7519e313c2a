#include <gtest/gtest.h>

#include <cmath>

#include "metricvote/line_solver.hpp"
#include "metricvote/oracle.hpp"
#include "metricvote/random.hpp"
#include "test_support.hpp"

namespace metricvote {
namespace {

using namespace metricvote::testing;

double winner(const AggregationResult& r) { return std::get<Real>(r.representative()).value; }

double lp(std::vector<double> v, Exponent p) {
  return winner(solve_line_lp(LineElectionView(std::move(v)), spec_of(Method::lp, p)));
}

TEST(LineLp, ClosedForms) {
  EXPECT_EQ(lp({0, 0, 1}, P(1)), 0.0);
  EXPECT_NEAR(lp({0, 0, 1}, P(2)), 1.0 / 3, 1e-15);
  EXPECT_EQ(lp({0, 0, 1}, Pinf()), 0.5);
  std::vector<double> outlier(100, 0.0);
  outlier.push_back(1.0);
  EXPECT_NEAR(lp(outlier, P(2)), 1.0 / 101, 1e-15);
}

TEST(LineLp, EvenMedianReportsInterval) {
  const auto r = solve_line_lp(LineElectionView({0, 1}), spec_of(Method::lp, P(1)));
  ASSERT_TRUE(r.diagnostics.interval);
  EXPECT_EQ(r.diagnostics.interval->first, 0.0);
  EXPECT_EQ(r.diagnostics.interval->second, 1.0);
  EXPECT_FALSE(r.unique);
  EXPECT_EQ(*r.objective, 1.0);
}

TEST(ReducedLine, Examples) {
  const auto reduce = [](std::vector<double> v) {
    return winner(reduce_line_lp(LineElectionView(std::move(v)), spec_of(Method::reduced_lp, P(1))));
  };
  EXPECT_NEAR(reduce({0, 1}), 0.5, 1e-9);
  EXPECT_NEAR(reduce({0, 0, 1, 2}), 2.0 / 3, 1e-3);
  EXPECT_EQ(reduce({0, 0, 1}), 0.0);
}

TEST(LineCondorcet, Examples) {
  EXPECT_EQ(winner(solve_line_condorcet(LineElectionView({0, 0, 1}))), 0.0);
  EXPECT_EQ(winner(solve_line_condorcet(LineElectionView({3}))), 3.0);

  const auto strict = solve_line_condorcet(LineElectionView({0, 1}));
  EXPECT_FALSE(strict.has_winner());
  ASSERT_TRUE(strict.diagnostics.interval);

  AggregationSpec weak;
  weak.strict_condorcet = false;
  const auto r = solve_line_condorcet(LineElectionView({0, 1}), weak);
  ASSERT_TRUE(r.diagnostics.interval);
  EXPECT_EQ(*r.diagnostics.interval, std::make_pair(0.0, 1.0));
}

TEST(Figure1, DerivedClosedForm) {
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    const double expected = 1.0 / (1.0 + std::pow(100.0, 1.0 / (p - 1.0)));
    EXPECT_NEAR(figure1_curve(101, p, Figure1Distribution::consensus_outlier), expected, 1e-6) << p;
    const double r = std::pow(100.0 / 102.0, 1.0 / (p - 1.0));
    EXPECT_NEAR(figure1_curve(101, p, Figure1Distribution::polarized), (1 - r) / (1 + r), 1e-6) << p;
  }
  EXPECT_NEAR(figure1_curve(101, 2, Figure1Distribution::consensus_outlier), 1.0 / 101, 1e-12);
  EXPECT_NEAR(figure1_curve(101, 2, Figure1Distribution::polarized), 1.0 / 101, 1e-12);
  EXPECT_NEAR(figure1_curve(101, 3, Figure1Distribution::consensus_outlier), 1.0 / 11, 1e-9);
  EXPECT_THROW(figure1_curve(100, 2, Figure1Distribution::polarized), std::invalid_argument);
}

TEST(LineLp, DerivativeChangesSignAcrossMinimizer) {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> v(1 + rng.index(15));
    for (double& x : v) x = rng.uniform() * 4 - 2;
    const double p = 1.1 + rng.uniform() * 4;
    const double x = lp(v, P(p));
    const double h = 1e-6;
    const auto f = [&](double y) { return line_objective(v, y, P(p)); };
    // One-sided slopes on each side of x bracket zero.
    EXPECT_LE((f(x) - f(x - h)) / h, 1e-6) << p;
    EXPECT_GE((f(x + h) - f(x)) / h, -1e-6) << p;
  }
}

TEST(LineLp, TranslationEquivariance) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> v(1 + rng.index(9));
    for (double& x : v) x = rng.uniform() * 10 - 5;
    const double c = rng.uniform() * 20 - 10;
    auto shifted = v;
    for (double& x : shifted) x += c;
    for (auto p : {P(1), P(1.7), P(2), P(3), Pinf()})
      EXPECT_NEAR(lp(shifted, p), lp(v, p) + c, 1e-9) << p.to_string();
  }
}

TEST(LineLp, MatchesGridOracle) {
  Rng rng(8);
  for (int t = 0; t < 60; ++t) {
    std::vector<double> v(1 + rng.index(12));
    for (double& x : v) x = rng.uniform() * 2 - 1;
    for (auto p : {P(1), P(1.5), P(2), P(4), Pinf()}) {
      const auto r = solve_line_lp(LineElectionView(v), spec_of(Method::lp, p));
      EXPECT_LE(*r.objective, line_grid_minimum(v, p) + 1e-9);
    }
  }
}

TEST(LineLp, FiniteDomainPicksBracketingPoints) {
  const LineElectionView view({0, 0, 1}, LineDomain::points({-1, 0.25, 0.5, 2}));
  EXPECT_EQ(winner(solve_line_lp(view, spec_of(Method::lp, P(2)))), 0.25);
  const auto r = solve_line_lp(view, spec_of(Method::lp, Pinf()));
  EXPECT_EQ(winner(r), 0.5);
  const LineElectionView gap({0, 1}, LineDomain::points({-3, 0.5, 4}));
  EXPECT_EQ(winner(solve_line_condorcet(gap)), 0.5);
}

TEST(LineLp, PEqualsTwoIsNotMajoritarian) {
  std::vector<double> v(10, 0.0);
  v.push_back(1.0);
  EXPECT_EQ(lp(v, P(1)), 0.0);
  EXPECT_NE(lp(v, P(2)), 0.0);
}

}  // namespace
}  // namespace metricvote
