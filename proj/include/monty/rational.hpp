#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace monty {

// Exact rational on checked 64-bit words, always kept normalized:
// den > 0, gcd(|num|, den) == 1, zero is 0/1. Arithmetic runs through
// 128-bit intermediates and throws std::overflow_error when a normalized
// result does not fit, so values never wrap or round silently.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: integers promote
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "3", "-3/4", and exact decimal strings like "0.25" (scaled by
  // a power of ten, never rounded through a binary float).
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  double to_double() const;

  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational normalized(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace monty
