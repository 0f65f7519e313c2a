#include <gtest/gtest.h>

#include <cmath>

#include "metricvote/error.hpp"
#include "metricvote/generate.hpp"
#include "metricvote/oracle.hpp"
#include "metricvote/plurality_solver.hpp"
#include "test_support.hpp"

namespace metricvote {
namespace {

using namespace metricvote::testing;

TEST(EnumerateSpace, Sizes) {
  EXPECT_EQ(enumerate_space(make("plurality", {std::string("a")}, Strings{"a", "b", "c"})).size(), 3u);
  EXPECT_EQ(enumerate_space(make("ranking", {Strings{"a", "b", "c"}}, Strings{"a", "b", "c"})).size(), 6u);
  EXPECT_EQ(enumerate_space(make("committee", {Strings{}}, Strings{"a", "b", "c"})).size(), 8u);
  EXPECT_EQ(enumerate_space(make("committee_fixed_k", {Strings{}}, Strings{"a", "b", "c", "d"}, 2)).size(), 6u);
  // Pool of 3 sentences, documents of length <= 2: 1 + 3 + 6.
  EXPECT_EQ(enumerate_space(make("legislation", {Strings{"x", "y"}, Strings{"z"}})).size(), 10u);
}

TEST(EnumerateSpace, GuardAndSettingErrors) {
  EXPECT_THROW(enumerate_space(make("line", {1.0})), std::invalid_argument);
  Strings many = alternative_names(22);
  try {
    enumerate_space(make("committee", {Strings{}}, many));
    FAIL() << "expected GuardExceeded";
  } catch (const GuardExceeded& g) {
    EXPECT_EQ(g.required(), std::pow(2.0, 22));
    EXPECT_EQ(g.limit(), static_cast<double>(kSpaceGuard));
  }
}

TEST(BruteForceLp, Examples) {
  const auto plur = make("plurality", {std::string("a"), std::string("a"), std::string("b")}, Strings{"a", "b"});
  auto r = brute_force_lp(plur, enumerate_space(plur), spec_of(Method::lp, P(1)));
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{"a"}));
  EXPECT_EQ(*r.objective, 1.0);

  const auto comm = make("committee", {Strings{"a"}, Strings{"b"}}, Strings{"a", "b"});
  r = brute_force_lp(comm, enumerate_space(comm), spec_of(Method::lp, P(1)));
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{"", "a", "a,b", "b"}));
  EXPECT_EQ(*r.objective, 2.0);

  const auto rank = make("ranking", {Strings{"a", "b", "c"}, Strings{"a", "b", "c"}, Strings{"c", "a", "b"}},
                         Strings{"a", "b", "c"});
  r = brute_force_lp(rank, enumerate_space(rank), spec_of(Method::lp, P(1)));
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{"a>b>c"}));
  EXPECT_EQ(*r.objective, 2.0);
  EXPECT_TRUE(r.unique);

  EXPECT_THROW(brute_force_lp(rank, enumerate_space(rank), spec_of(Method::condorcet, P(1))),
               std::invalid_argument);
}

TEST(BruteForceCondorcet, Examples) {
  const auto plur = make("plurality", {std::string("a"), std::string("a"), std::string("b")}, Strings{"a", "b"});
  auto r = brute_force_condorcet(plur, enumerate_space(plur), true);
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{"a"}));

  const auto comm = make("committee", {Strings{}, Strings{}, Strings{"a", "b"}, Strings{"a", "c"}, Strings{"b", "c"}},
                         Strings{"a", "b", "c"});
  r = brute_force_condorcet(comm, enumerate_space(comm), true);
  EXPECT_FALSE(r.has_winner());
  EXPECT_FALSE(r.diagnostics.reason.empty());

  const auto cycle = make("ranking", {Strings{"a", "b", "c"}, Strings{"b", "c", "a"}, Strings{"c", "a", "b"}},
                          Strings{"a", "b", "c"});
  r = brute_force_condorcet(cycle, enumerate_space(cycle), true);
  EXPECT_FALSE(r.has_winner());
}

TEST(BruteForceCondorcet, StrictWinnersAreWeakWinnersAndUnique) {
  Rng rng(5);
  for (Setting s : {Setting::plurality, Setting::ranking, Setting::committee, Setting::committee_fixed_k}) {
    for (int t = 0; t < 60; ++t) {
      InstanceShape shape;
      shape.n = 1 + rng.index(6);
      shape.m = 2 + rng.index(s == Setting::ranking ? 3 : 3);
      const auto e = random_election(s, shape, rng);
      const auto space = enumerate_space(e);
      const auto strict = keys(brute_force_condorcet(e, space, true).winners);
      const auto weak = keys(brute_force_condorcet(e, space, false).winners);
      EXPECT_LE(strict.size(), 1u);
      for (const auto& k : strict) EXPECT_TRUE(weak.count(k)) << k;
    }
  }
}

TEST(BruteForceLp, PluralitySpaceGivesPluralityWinners) {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    InstanceShape shape;
    shape.n = 1 + rng.index(12);
    shape.m = 1 + rng.index(5);
    const auto e = random_election(Setting::plurality, shape, rng);
    const auto counts = plurality_counts(e);
    const auto best = *std::max_element(counts.begin(), counts.end());
    std::set<std::string> leaders;
    for (std::size_t a = 0; a < e.m(); ++a)
      if (counts[a] == best) leaders.insert(e.alternatives[a]);
    EXPECT_EQ(keys(brute_force_lp(e, enumerate_space(e), spec_of(Method::lp, P(1))).winners), leaders);
  }
}

TEST(BfsEditDistance, Examples) {
  EXPECT_DOUBLE_EQ(bfs_edit_distance({{"s1", "s2"}}, {{"s2", "s1"}}, 2), 0.25);
  EXPECT_EQ(bfs_edit_distance({{"s1", "s2", "s3"}}, {{"s1", "s2", "s3"}}, 7), 0.0);
  EXPECT_DOUBLE_EQ(bfs_edit_distance({{"s1", "s2", "s3"}}, {{"s3", "s1"}}, 3), 10.0 / 9);
  EXPECT_THROW(bfs_edit_distance({{"a", "b", "c", "d", "e", "f"}}, {{"a"}}, 6), GuardExceeded);
}

TEST(LineGrid, Minimum) {
  const std::vector<double> v{0, 0, 1};
  EXPECT_NEAR(line_grid_minimum(v, P(2)), 2.0 / 3, 1e-9);
  EXPECT_NEAR(line_grid_minimum(v, Pinf()), 0.5, 1e-12);
}

TEST(Projection, OntoSimplex) {
  const std::vector<double> x{0.5, 0.5, 0.5};
  const auto y = project_onto_simplex(x);
  for (double yi : y) EXPECT_NEAR(yi, 1.0 / 3, 1e-15);
  const std::vector<double> far{2.0, -1.0};
  EXPECT_EQ(project_onto_simplex(far), (std::vector<double>{1.0, 0.0}));
}

}  // namespace
}  // namespace metricvote
