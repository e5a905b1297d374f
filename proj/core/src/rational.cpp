#include "lrkit/rational.hpp"

#include <charconv>

namespace lrkit {

namespace {

Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int parse_int(std::string_view s) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) throw OverflowError("integer literal out of range: " + std::string(s));
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(Int num, Int den) { *this = from_wide(num, den); }

Rational Rational::from_wide(Int128 num, Int128 den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = checked::narrow(num);
  r.den_ = checked::narrow(den);
  return r;
}

Int Rational::to_integer() const {
  if (den_ != 1) throw DataIntegrityError("expected an integer, got " + to_string());
  return num_;
}

Rational Rational::operator-() const { return from_wide(-static_cast<Int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked::add(num_, o.num_);
    return *this;
  }
  Int128 n = static_cast<Int128>(num_) * o.den_ + static_cast<Int128>(o.num_) * den_;
  Int128 d = static_cast<Int128>(den_) * o.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = checked::mul(num_, o.num_);
    return *this;
  }
  return *this = from_wide(static_cast<Int128>(num_) * o.num_, static_cast<Int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw InvalidArgument("division by zero");
  return *this = from_wide(static_cast<Int128>(num_) * o.den_, static_cast<Int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Int128 lhs = static_cast<Int128>(a.num_) * b.den_;
  Int128 rhs = static_cast<Int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  std::string_view sv(text);
  return Rational(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace lrkit
