#include "metricvote/spec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "metricvote/error.hpp"

namespace metricvote {

Exponent Exponent::finite(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw ValidationError("exponent p must be a finite number >= 1 (use infinity() for inf)");
  return Exponent(p, false);
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("cannot parse exponent '" + std::string(text) + "'");
  return finite(value);
}

double Exponent::value() const {
  if (infinite_) throw std::logic_error("Exponent::value() on p = inf");
  return value_;
}

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", value_);
  return buf;
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::condorcet: return "condorcet";
    case Method::lp: return "lp";
    case Method::reduced_lp: return "reduced-lp";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "condorcet") return Method::condorcet;
  if (name == "lp") return Method::lp;
  if (name == "reduced-lp" || name == "reduced_lp") return Method::reduced_lp;
  return std::nullopt;
}

void AggregationSpec::validate() const {
  if (!(tolerance > 0.0) || !(objective_tolerance > 0.0))
    throw ValidationError("tolerances must be positive");
  if (!(reduced_epsilon > 0.0) || reduced_epsilon > 0.1)
    throw ValidationError("reduced_epsilon must lie in (0, 0.1]");
  if (max_iterations == 0) throw ValidationError("max_iterations must be positive");
}

const Point& AggregationResult::representative() const {
  if (representative_point) return *representative_point;
  if (winners.empty()) throw std::logic_error("result has no winner");
  return winners.front();
}

void finalize_winners(AggregationResult& result) {
  sort_canonical(result.winners);
  if (result.spec.tie_break == TieBreak::lexicographic && result.winners.size() > 1) {
    result.winners.resize(1);
    result.representative_point.reset();
  }
  if (result.winners.size() > kWinnerCap) {
    result.winners.resize(kWinnerCap);
    result.diagnostics.truncated = true;
  }
}

}  // namespace metricvote
