#include "monty/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace monty {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads a run of decimal digits at pos, throwing on absence or overflow.
std::int64_t read_digits(std::string_view text, std::size_t& pos,
                         int* count = nullptr) {
  if (pos >= text.size() || !is_digit(text[pos]))
    throw std::invalid_argument("rational: expected digits in '" +
                                std::string(text) + "'");
  std::int64_t value = 0;
  int n = 0;
  while (pos < text.size() && is_digit(text[pos])) {
    int digit = text[pos] - '0';
    if (__builtin_mul_overflow(value, std::int64_t(10), &value) ||
        __builtin_add_overflow(value, std::int64_t(digit), &value))
      throw std::overflow_error("rational: literal too large: '" +
                                std::string(text) + "'");
    ++pos;
    ++n;
  }
  if (count) *count = n;
  return value;
}

}  // namespace

Rational Rational::normalized(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(uabs(num), u128(den));
  u128 n = uabs(num) / g;
  u128 d = u128(den) / g;
  // |num| is capped at int64 max as well, so negation is always safe.
  if (n > u128(kMax) || d > u128(kMax))
    throw std::overflow_error("rational: value does not fit in 64 bits");
  Rational r;
  r.num_ = num < 0 ? -std::int64_t(n) : std::int64_t(n);
  r.den_ = std::int64_t(d);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = normalized(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t whole = read_digits(text, pos);
  i128 num = whole;
  i128 den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits(text, pos);
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int places = 0;
    std::int64_t frac = read_digits(text, pos, &places);
    if (places > 18)
      throw std::overflow_error("rational: too many decimal places: '" +
                                std::string(text) + "'");
    for (int i = 0; i < places; ++i) den *= 10;
    num = num * den + frac;
  }
  if (pos != text.size())
    throw std::invalid_argument("rational: trailing characters in '" +
                                std::string(text) + "'");
  return normalized(negative ? -num : num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  i128 num;
  if (__builtin_add_overflow(lhs, rhs, &num))
    throw std::overflow_error("rational: addition overflow");
  return Rational::normalized(num, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::normalized(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational: division by zero");
  return Rational::normalized(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace monty
