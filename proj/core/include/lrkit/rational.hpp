#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "lrkit/checked.hpp"

namespace lrkit {

/// Exact rational number with a 64-bit numerator and positive denominator,
/// always in lowest terms. Intermediate products use 128 bits; results that
/// do not fit throw OverflowError.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  /// Numerator when the value is integral; throws DataIntegrityError otherwise.
  Int to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" or "p/q".
  std::string to_string() const;
  /// Accepts "p", "-p", "p/q".
  static Rational parse(const std::string& text);

 private:
  static Rational from_wide(Int128 num, Int128 den);

  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lrkit
