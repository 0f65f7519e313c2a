#include "metricvote/point.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace metricvote {
namespace {

constexpr std::array<std::pair<Setting, std::string_view>, 7> kSettingNames{{
    {Setting::plurality, "plurality"},
    {Setting::line, "line"},
    {Setting::budget, "budget"},
    {Setting::ranking, "ranking"},
    {Setting::committee, "committee"},
    {Setting::committee_fixed_k, "committee_fixed_k"},
    {Setting::legislation, "legislation"},
}};

std::string fixed12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  std::string out(buf);
  if (out == "-0.000000000000") out.erase(0, 1);
  return out;
}

template <class Range>
std::string join(const Range& items, char sep) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    out += item;
    first = false;
  }
  return out;
}

}  // namespace

std::string_view to_string(Setting setting) {
  for (const auto& [s, name] : kSettingNames)
    if (s == setting) return name;
  return "unknown";
}

std::optional<Setting> parse_setting(std::string_view name) {
  for (const auto& [s, n] : kSettingNames)
    if (n == name) return s;
  return std::nullopt;
}

bool is_finite_setting(Setting setting) {
  return setting != Setting::line && setting != Setting::budget;
}

Subset make_subset(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Subset{std::move(members)};
}

std::string canonical_encode(const Point& point) {
  struct Encoder {
    std::string operator()(const Label& l) const { return l.id; }
    std::string operator()(const Real& r) const { return fixed12(r.value); }
    std::string operator()(const Simplex& s) const {
      std::vector<std::string> parts;
      parts.reserve(s.weights.size());
      for (double w : s.weights) parts.push_back(fixed12(w));
      return join(parts, ',');
    }
    std::string operator()(const Permutation& p) const { return join(p.order, '>'); }
    std::string operator()(const Subset& s) const {
      auto members = s.members;
      std::sort(members.begin(), members.end());
      return join(members, ',');
    }
    std::string operator()(const Document& d) const {
      return join(d.sentences, kSentenceSeparator);
    }
  };
  return std::visit(Encoder{}, point);
}

void sort_canonical(std::vector<Point>& points) {
  std::vector<std::pair<std::string, Point>> keyed;
  keyed.reserve(points.size());
  for (auto& p : points) keyed.emplace_back(canonical_encode(p), std::move(p));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  points.clear();
  for (auto& [key, p] : keyed) points.push_back(std::move(p));
}

std::string_view variant_name(const Point& point) {
  constexpr std::array<std::string_view, 6> names{"label",       "real",   "simplex",
                                                  "permutation", "subset", "document"};
  return names[point.index()];
}

}  // namespace metricvote
