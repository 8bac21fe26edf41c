#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ptcomp {

// Exact non-negative-denominator fraction, always stored in lowest terms.
// Used for proportions and thresholds so that constraint checks such as
// "count >= p * degree" never depend on floating-point rounding.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Parses "3/4", "0.75", ".75", "1" or "1e0"-free decimals. Throws
  // InvalidInput on anything else.
  static Rational parse(std::string_view text);

  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// True iff count >= r * scale, evaluated exactly.
bool meets_threshold(std::uint64_t count, const Rational& r, std::uint64_t scale) noexcept;

}  // namespace ptcomp
