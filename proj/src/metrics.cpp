#include "metricvote/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace metricvote {
namespace {

std::int64_t merge_count(std::vector<int>& values, std::vector<int>& scratch, std::size_t lo,
                         std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t count = merge_count(values, scratch, lo, mid) + merge_count(values, scratch, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (values[j] < values[i]) {
      count += static_cast<std::int64_t>(mid - i);
      scratch[out++] = values[j++];
    } else {
      scratch[out++] = values[i++];
    }
  }
  while (i < mid) scratch[out++] = values[i++];
  while (j < hi) scratch[out++] = values[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, values.begin() + lo);
  return count;
}

template <class T>
const T& as(const Point& p, Setting setting) {
  if (const T* value = std::get_if<T>(&p)) return *value;
  throw std::invalid_argument("point of kind " + std::string(variant_name(p)) +
                              " does not belong to setting " + std::string(to_string(setting)));
}

}  // namespace

std::int64_t count_inversions(std::span<const int> values) {
  std::vector<int> work(values.begin(), values.end());
  std::vector<int> scratch(work.size());
  return merge_count(work, scratch, 0, work.size());
}

double discrete_distance(const Label& x, const Label& y) { return x.id == y.id ? 0.0 : 1.0; }

double line_distance(const Real& x, const Real& y) { return std::abs(x.value - y.value); }

double simplex_distance(const Simplex& x, const Simplex& y) {
  if (x.weights.size() != y.weights.size())
    throw std::invalid_argument("simplex dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < x.weights.size(); ++i) {
    const double d = x.weights[i] - y.weights[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::int64_t kendall_distance(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw std::invalid_argument("permutation universe mismatch");
  std::vector<int> position(x.size(), -1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || static_cast<std::size_t>(x[i]) >= x.size() || position[x[i]] != -1)
      throw std::invalid_argument("not a permutation");
    position[x[i]] = static_cast<int>(i);
  }
  std::vector<int> relabeled(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0 || static_cast<std::size_t>(y[i]) >= y.size())
      throw std::invalid_argument("permutation universe mismatch");
    relabeled[i] = position[y[i]];
  }
  return count_inversions(relabeled);
}

std::int64_t kendall_distance(const Permutation& x, const Permutation& y) {
  if (x.order.size() != y.order.size())
    throw std::invalid_argument("permutation universe mismatch");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < x.order.size(); ++i)
    if (!index.emplace(x.order[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate alternative in permutation");
  std::vector<int> relabeled;
  relabeled.reserve(y.order.size());
  std::vector<bool> seen(y.order.size(), false);
  for (const auto& id : y.order) {
    const auto it = index.find(id);
    if (it == index.end() || seen[it->second])
      throw std::invalid_argument("permutation universe mismatch");
    seen[it->second] = true;
    relabeled.push_back(it->second);
  }
  return count_inversions(relabeled);
}

std::int64_t hamming_distance(const Subset& x, const Subset& y) {
  auto a = x.members, b = y.members;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::string> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return static_cast<std::int64_t>(diff.size());
}

std::int64_t common_inversions(std::span<const int> x, std::span<const int> y) {
  std::unordered_map<int, int> position;
  for (std::size_t i = 0; i < x.size(); ++i) position.emplace(x[i], static_cast<int>(i));
  std::vector<int> relabeled;
  for (int s : y) {
    const auto it = position.find(s);
    if (it != position.end()) relabeled.push_back(it->second);
  }
  return count_inversions(relabeled);
}

double document_distance(std::span<const int> x, std::span<const int> y, std::size_t ell) {
  if (ell < std::max(x.size(), y.size()) || ell == 0)
    throw std::invalid_argument("ell smaller than document length");
  std::vector<int> a(x.begin(), x.end()), b(y.begin(), y.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  const auto unshared = static_cast<double>(a.size() + b.size() - 2 * common.size());
  const auto ell2 = static_cast<double>(ell) * static_cast<double>(ell);
  return unshared + static_cast<double>(common_inversions(x, y)) / ell2;
}

double document_distance(const Document& x, const Document& y, std::size_t ell) {
  std::unordered_map<std::string, int> ids;
  auto encode = [&](const Document& d) {
    std::vector<int> out;
    out.reserve(d.sentences.size());
    for (const auto& s : d.sentences)
      out.push_back(ids.emplace(s, static_cast<int>(ids.size())).first->second);
    return out;
  };
  const auto xi = encode(x);
  const auto yi = encode(y);
  return document_distance(xi, yi, ell);
}

double distance(const MetricDescriptor& metric, const Point& x, const Point& y) {
  switch (metric.setting) {
    case Setting::plurality:
      return discrete_distance(as<Label>(x, metric.setting), as<Label>(y, metric.setting));
    case Setting::line:
      return line_distance(as<Real>(x, metric.setting), as<Real>(y, metric.setting));
    case Setting::budget:
      return simplex_distance(as<Simplex>(x, metric.setting), as<Simplex>(y, metric.setting));
    case Setting::ranking:
      return static_cast<double>(
          kendall_distance(as<Permutation>(x, metric.setting), as<Permutation>(y, metric.setting)));
    case Setting::committee:
    case Setting::committee_fixed_k:
      return static_cast<double>(
          hamming_distance(as<Subset>(x, metric.setting), as<Subset>(y, metric.setting)));
    case Setting::legislation:
      if (!metric.ell) throw std::invalid_argument("document metric requires ell");
      return document_distance(as<Document>(x, metric.setting), as<Document>(y, metric.setting),
                               *metric.ell);
  }
  throw std::invalid_argument("unknown setting");
}

}  // namespace metricvote
