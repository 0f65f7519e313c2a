#include <gtest/gtest.h>

#include "metricvote/error.hpp"
#include "metricvote/generate.hpp"
#include "metricvote/metrics.hpp"
#include "metricvote/oracle.hpp"
#include "metricvote/ranking_solver.hpp"
#include "test_support.hpp"

namespace metricvote {
namespace {

using namespace metricvote::testing;

Strings order(const std::string& s) {
  Strings out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

Election ranking(std::initializer_list<const char*> voters) {
  std::vector<RawBallot> ballots;
  for (const char* v : voters) ballots.emplace_back(order(v));
  Strings alts = order(*voters.begin());
  std::sort(alts.begin(), alts.end());
  return make("ranking", ballots, alts);
}

std::string key(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!out.empty()) out += '>';
    out += c;
  }
  return out;
}

TEST(Kemeny, Examples) {
  auto r = solve_kemeny(ranking({"abc", "abc", "cab"}), spec_of(Method::lp, P(1)));
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{key("abc")}));
  EXPECT_EQ(*r.objective, 2.0);

  r = solve_kemeny(ranking({"cadb"}), spec_of(Method::lp, P(1)));
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{key("cadb")}));
  EXPECT_EQ(*r.objective, 0.0);

  r = solve_kemeny(ranking({"abcde", "eabcd"}), spec_of(Method::lp, P(1)));
  EXPECT_TRUE(keys(r.winners).count(key("abecd")));
  EXPECT_EQ(*r.objective, 4.0);
  EXPECT_EQ(r.winners.size(), 5u);
}

TEST(CenterPermutation, Examples) {
  auto r = solve_center_permutation(ranking({"bca", "bca"}), spec_of(Method::lp, Pinf()));
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{key("bca")}));
  EXPECT_EQ(*r.objective, 0.0);

  r = solve_center_permutation(ranking({"abcde", "eabcd"}), spec_of(Method::lp, Pinf()));
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{key("abecd")}));
  EXPECT_EQ(*r.objective, 2.0);

  r = solve_center_permutation(ranking({"ab", "ba"}), spec_of(Method::lp, Pinf()));
  EXPECT_EQ(r.winners.size(), 2u);
  EXPECT_EQ(*r.objective, 1.0);
}

TEST(RankingLp, MajorityIsOverruledForPTwo) {
  const auto r = solve_ranking_lp(ranking({"abc", "abc", "cab"}), spec_of(Method::lp, P(2)));
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{key("acb")}));
  EXPECT_EQ(*r.objective, 3.0);
  EXPECT_EQ(solve_ranking_lp(ranking({"dbca"}), spec_of(Method::lp, P(3))).winners.size(), 1u);
}

TEST(RankingLp, ReducedBreaksTheMonotonicityTie) {
  const auto after = ranking({"abcde", "abecd"});
  const auto plain = solve_kemeny(after, spec_of(Method::lp, P(1)));
  EXPECT_EQ(keys(plain.winners), (std::set<std::string>{key("abcde"), key("abced"), key("abecd")}));
  for (auto p : {P(1), Pinf()}) {
    const auto r = solve_ranking_lp(after, spec_of(Method::reduced_lp, p));
    EXPECT_EQ(keys(r.winners), (std::set<std::string>{key("abced")})) << p.to_string();
  }
}

TEST(RankingCondorcet, Examples) {
  auto r = solve_ranking_condorcet(ranking({"abc", "bca", "cab"}), {});
  EXPECT_FALSE(r.has_winner());
  EXPECT_EQ(r.diagnostics.reason, "no_condorcet_winner");
  r = solve_ranking_condorcet(ranking({"bac", "bac"}), {});
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{key("bac")}));
  r = solve_ranking_condorcet(ranking({"cab", "cab", "abc"}), {});
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{key("cab")}));
}

TEST(Kemeny, DpMatchesExhaustiveOracle) {
  Rng rng(41);
  for (int t = 0; t < 80; ++t) {
    InstanceShape shape;
    shape.n = 1 + rng.index(9);
    shape.m = 1 + rng.index(6);
    const auto e = random_election(Setting::ranking, shape, rng);
    const auto spec = spec_of(Method::lp, P(1));
    const auto dp = solve_kemeny(e, spec);
    const auto oracle = brute_force_lp(e, enumerate_space(e), spec);
    EXPECT_EQ(keys(dp.winners), keys(oracle.winners));
    EXPECT_EQ(*dp.objective, *oracle.objective);
    EXPECT_EQ(keys(solve_ranking_lp(e, spec).winners), keys(oracle.winners));
  }
}

TEST(Kemeny, PairwiseDecomposition) {
  Rng rng(43);
  for (int t = 0; t < 50; ++t) {
    InstanceShape shape;
    shape.n = 1 + rng.index(8);
    shape.m = 2 + rng.index(6);
    const auto e = random_election(Setting::ranking, shape, rng);
    const auto index = alternative_index(e);
    PairwiseMatrix pm(e.m());
    for (const auto& v : e.voters) {
      std::vector<int> o;
      for (const auto& a : std::get<Permutation>(v).order) o.push_back(index.at(a));
      pm.add_order(o);
    }
    const auto x = std::get<Permutation>(random_point(e, rng));
    std::vector<int> xo;
    for (const auto& a : x.order) xo.push_back(index.at(a));
    std::int64_t direct = 0;
    for (const auto& v : e.voters) direct += kendall_distance(x, std::get<Permutation>(v));
    EXPECT_EQ(pm.disagreement(xo), direct);
  }
}

TEST(Ranking, LpMatchesOracleForOtherExponents) {
  Rng rng(47);
  for (int t = 0; t < 30; ++t) {
    InstanceShape shape;
    shape.n = 1 + rng.index(6);
    shape.m = 1 + rng.index(4);
    const auto e = random_election(Setting::ranking, shape, rng);
    const auto space = enumerate_space(e);
    for (auto p : {P(2), P(3), Pinf()}) {
      for (Method method : {Method::lp, Method::reduced_lp}) {
        const auto spec = spec_of(method, p);
        EXPECT_EQ(keys(solve_ranking_lp(e, spec).winners), keys(brute_force_lp(e, space, spec).winners));
      }
    }
    EXPECT_EQ(keys(solve_ranking_condorcet(e, {}).winners),
              keys(brute_force_condorcet(e, space, true).winners));
  }
}

TEST(Ranking, RelabelingIsEquivariant) {
  const auto e = ranking({"abcd", "dbca", "cabd", "abdc"});
  const auto renamed = ranking({"wxyz", "zxyw", "ywxz", "wxzy"});
  const auto spec = spec_of(Method::lp, P(1));
  std::set<std::string> mapped;
  for (const auto& w : solve_kemeny(e, spec).winners) {
    std::string s = canonical_encode(w);
    for (char& c : s)
      if (c >= 'a' && c <= 'd') c = "wxyz"[c - 'a'];
    mapped.insert(s);
  }
  // the voters above use a->w, b->x, c->y, d->z
  EXPECT_EQ(mapped, keys(solve_kemeny(renamed, spec).winners));
}

TEST(Ranking, Guards) {
  const auto big = [](std::size_t z) {
    Strings alts = alternative_names(z);
    return make("ranking", {alts}, alts);
  };
  EXPECT_THROW(solve_kemeny(big(19), spec_of(Method::lp, P(1))), GuardExceeded);
  EXPECT_THROW(solve_center_permutation(big(10), spec_of(Method::lp, Pinf())), GuardExceeded);
  EXPECT_THROW(solve_ranking_condorcet(big(7), {}), GuardExceeded);
}

TEST(LocalSearch, FlaggedAndNeverBetterThanExact) {
  Rng rng(53);
  for (int t = 0; t < 30; ++t) {
    InstanceShape shape;
    shape.n = 1 + rng.index(9);
    shape.m = 2 + rng.index(6);
    const auto e = random_election(Setting::ranking, shape, rng);
    const auto spec = spec_of(Method::lp, P(1));
    const auto heuristic = kemeny_local_search(e, spec);
    EXPECT_TRUE(heuristic.diagnostics.heuristic);
    EXPECT_GE(*heuristic.objective, *solve_kemeny(e, spec).objective);
  }
  const auto unanimous = ranking({"dcba", "dcba", "dcba"});
  const auto r = kemeny_local_search(unanimous, spec_of(Method::lp, P(1)));
  EXPECT_EQ(keys(r.winners), (std::set<std::string>{key("dcba")}));
  EXPECT_EQ(*r.objective, 0.0);
}

}  // namespace
}  // namespace metricvote
