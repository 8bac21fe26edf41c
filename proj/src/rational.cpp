#include "ptcomp/rational.hpp"

#include <charconv>
#include <numeric>

#include "ptcomp/error.hpp"

namespace ptcomp {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw InvalidInput("rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational make_reduced(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

std::uint64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidInput("not a number: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_digits(text.substr(0, slash), text);
    auto den = parse_digits(text.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return make_reduced(static_cast<i128>(num), static_cast<i128>(den));
  }

  auto dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) throw InvalidInput("not a number: '" + std::string(text) + "'");
  if (frac_part.size() > 18) throw InvalidInput("too many decimal digits in '" + std::string(text) + "'");

  std::uint64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
  std::uint64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
  i128 den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  return make_reduced(static_cast<i128>(whole) * den + frac, den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_reduced(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                      static_cast<i128>(a.den_) * b.den_);
}

bool meets_threshold(std::uint64_t count, const Rational& r, std::uint64_t scale) noexcept {
  return static_cast<i128>(count) * r.den() >= static_cast<i128>(r.num()) * static_cast<i128>(scale);
}

}  // namespace ptcomp
