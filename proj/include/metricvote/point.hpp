#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace metricvote {

enum class Setting {
  plurality,
  line,
  budget,
  ranking,
  committee,
  committee_fixed_k,
  legislation,
};

std::string_view to_string(Setting setting);
std::optional<Setting> parse_setting(std::string_view name);

/// Whether the setting's outcome space is finite (enumerable by the oracle).
bool is_finite_setting(Setting setting);

struct Label {
  std::string id;
  bool operator==(const Label&) const = default;
};

struct Real {
  double value = 0.0;
  bool operator==(const Real&) const = default;
};

struct Simplex {
  std::vector<double> weights;
  bool operator==(const Simplex&) const = default;
};

/// Most- to least-preferred.
struct Permutation {
  std::vector<std::string> order;
  bool operator==(const Permutation&) const = default;
};

/// Members are kept sorted and duplicate-free; build with make_subset().
struct Subset {
  std::vector<std::string> members;
  bool operator==(const Subset&) const = default;
};

struct Document {
  std::vector<std::string> sentences;
  bool operator==(const Document&) const = default;
};

using Point = std::variant<Label, Real, Simplex, Permutation, Subset, Document>;

Subset make_subset(std::vector<std::string> members);

/// Sentences may not contain this byte; it joins sentences in canonical keys.
inline constexpr char kSentenceSeparator = '\x1e';

/// Total-order key used for sorting winner lists and lexicographic tie-breaking.
std::string canonical_encode(const Point& point);

/// Sorts by canonical key and drops points with identical keys.
void sort_canonical(std::vector<Point>& points);

/// Name of the held alternative ("label", "real", ...), for diagnostics.
std::string_view variant_name(const Point& point);

}  // namespace metricvote
