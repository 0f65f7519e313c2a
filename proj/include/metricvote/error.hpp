#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metricvote {

/// Malformed election, ballot, or aggregation spec.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact solver refused an instance larger than its documented size guard.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, double required, double limit)
      : std::runtime_error(what + " (required " + format_size(required) +
                           ", limit " + format_size(limit) + ")"),
        required_(required),
        limit_(limit) {}

  double required() const { return required_; }
  double limit() const { return limit_; }

 private:
  static std::string format_size(double v) {
    if (v < 1e15) return std::to_string(static_cast<unsigned long long>(v));
    return std::to_string(v);
  }

  double required_;
  double limit_;
};

}  // namespace metricvote
