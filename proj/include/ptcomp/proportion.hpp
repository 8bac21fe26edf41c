#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptcomp/rational.hpp"

namespace ptcomp {

// The proportion function p together with its horizon t. Holds p(1..t) as
// exact fractions in [0,1], non-decreasing; p(x) = p(t) for every x > t.
class ProportionFunction {
 public:
  // Throws InvalidInput if empty, out of [0,1] or decreasing.
  explicit ProportionFunction(std::vector<Rational> props);

  // Comma-separated list such as "0,1/2" or "0.5,1.0"; t is the list length.
  static ProportionFunction parse(std::string_view csv);

  // The t-spanner special case: p(i) = 0 for i < t, p(t) = 1.
  static ProportionFunction spanner(unsigned t);

  unsigned t() const noexcept { return static_cast<unsigned>(props_.size()); }

  // p(level) for level >= 1.
  const Rational& at(unsigned level) const noexcept {
    return props_[(level > props_.size() ? props_.size() : level) - 1];
  }

  std::span<const Rational> values() const noexcept { return props_; }
  std::string to_string() const;

  friend bool operator==(const ProportionFunction&, const ProportionFunction&) = default;

 private:
  std::vector<Rational> props_;
};

}  // namespace ptcomp
