#include "metricvote/generate.hpp"

#include <algorithm>
#include <numeric>

namespace metricvote {

std::vector<std::string> alternative_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    std::string id(1, static_cast<char>('a' + i % 26));
    if (i >= 26) id += std::to_string(i / 26);
    names.push_back(std::move(id));
  }
  return names;
}

Point random_point(const Election& election, Rng& rng) {
  const auto& alts = election.alternatives;
  switch (election.setting) {
    case Setting::plurality:
      return Label{alts[rng.index(alts.size())]};
    case Setting::line:
      if (rng.coin()) return Real{static_cast<double>(rng.between(-5, 5))};
      return Real{rng.uniform() * 10.0 - 5.0};
    case Setting::budget: {
      const std::size_t m = alts.size();
      if (rng.index(3) == 0 && m > 1) {
        // A face of the simplex: some coordinates stay zero.
        std::vector<std::size_t> idx(m);
        std::iota(idx.begin(), idx.end(), 0);
        rng.shuffle(idx);
        const std::size_t support = 1 + rng.index(m - 1);
        const auto w = rng.dirichlet(support);
        std::vector<double> x(m, 0.0);
        for (std::size_t i = 0; i < support; ++i) x[idx[i]] = w[i];
        return Simplex{x};
      }
      return Simplex{rng.dirichlet(m)};
    }
    case Setting::ranking: {
      auto order = alts;
      rng.shuffle(order);
      return Permutation{order};
    }
    case Setting::committee:
    case Setting::committee_fixed_k: {
      std::vector<std::string> members;
      if (election.k) {
        auto shuffled = alts;
        rng.shuffle(shuffled);
        members.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(*election.k));
      } else {
        for (const auto& a : alts)
          if (rng.coin()) members.push_back(a);
      }
      return make_subset(std::move(members));
    }
    case Setting::legislation: {
      auto shuffled = alts;
      rng.shuffle(shuffled);
      const std::size_t len = rng.index(std::min(election.ell, alts.size()) + 1);
      shuffled.resize(len);
      return Document{shuffled};
    }
  }
  return Label{};
}

Election random_election(Setting setting, const InstanceShape& shape, Rng& rng) {
  RawElection raw;
  raw.setting = std::string(to_string(setting));
  const auto names = alternative_names(shape.m);
  if (setting != Setting::line && setting != Setting::legislation) raw.alternatives = names;
  if (setting == Setting::committee_fixed_k)
    raw.k = static_cast<long long>(shape.k ? *shape.k : rng.index(shape.m + 1));

  Election stub;
  stub.setting = setting;
  stub.alternatives = names;
  if (raw.k) stub.k = static_cast<std::size_t>(*raw.k);
  stub.ell = std::max<std::size_t>(1, std::min(shape.max_document, shape.m));

  for (std::size_t i = 0; i < shape.n; ++i) {
    const Point p = random_point(stub, rng);
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Label>) raw.voters.emplace_back(v.id);
          else if constexpr (std::is_same_v<T, Real>) raw.voters.emplace_back(v.value);
          else if constexpr (std::is_same_v<T, Simplex>) {
            std::vector<std::pair<std::string, double>> b;
            for (std::size_t a = 0; a < names.size(); ++a) b.emplace_back(names[a], v.weights[a]);
            raw.voters.emplace_back(std::move(b));
          } else if constexpr (std::is_same_v<T, Permutation>) raw.voters.emplace_back(v.order);
          else if constexpr (std::is_same_v<T, Subset>) raw.voters.emplace_back(v.members);
          else raw.voters.emplace_back(v.sentences);
        },
        p);
  }
  return validate_election(raw);
}

Election plant_majority(const Election& election, std::size_t extra, Rng& rng) {
  const std::size_t n = election.n();
  Point w = rng.coin() ? election.voters[rng.index(n)] : random_point(election, rng);
  if (election.setting == Setting::legislation) {
    // Stay inside the existing pool so the election's sentence pool is unchanged.
    w = election.voters[rng.index(n)];
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  rng.shuffle(idx);
  const std::size_t count = std::min(n, (n + 1) / 2 + extra);
  Election out = election;
  for (std::size_t i = 0; i < count; ++i) out = with_voter(out, idx[i], w);
  return out;
}

}  // namespace metricvote
