#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace metricvote {

/// mt19937_64 with hand-written transforms so draws are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n); n > 0.
  std::size_t index(std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do r = engine_(); while (r >= limit);
    return static_cast<std::size_t>(r % n);
  }

  /// Uniform integer in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1))); }

  bool coin() { return (engine_() >> 63) != 0; }

  double normal() {
    double u = 0.0;
    while (u == 0.0) u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
  }

  /// Dirichlet(1, ..., 1): uniform on the probability simplex.
  std::vector<double> dirichlet(std::size_t m) {
    std::vector<double> x(m);
    double sum = 0.0;
    for (double& xi : x) {
      double u = 0.0;
      while (u == 0.0) u = uniform();
      xi = -std::log(u);
      sum += xi;
    }
    for (double& xi : x) xi /= sum;
    return x;
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace metricvote
