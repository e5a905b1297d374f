#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lrkit/rational.hpp"

namespace lrkit {

/// Affine form Σ coeffs[i]·x[i] + constant over a fixed number of variables.
struct LinearForm {
  std::vector<Rational> coeffs;
  Rational constant;

  LinearForm() = default;
  explicit LinearForm(std::size_t nvars) : coeffs(nvars) {}
  LinearForm(std::vector<Rational> c, Rational k) : coeffs(std::move(c)), constant(k) {}

  std::size_t nvars() const { return coeffs.size(); }
  Rational evaluate(std::span<const Int> point) const;
  /// Substitutes x[j] -> x[perm[j]].
  LinearForm permuted(std::span<const int> perm) const;
  /// Positive multiple with coprime integer coefficients (the zero form stays
  /// zero). Two forms defining the same half-space normalize equally.
  LinearForm normalized() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm& a, const LinearForm& b) {
    if (auto c = a.coeffs <=> b.coeffs; c != 0) return c;
    return a.constant <=> b.constant;
  }
};

/// Multivariate polynomial with exact rational coefficients, stored as a map
/// from exponent vectors to nonzero coefficients. The map order is the
/// canonical form.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, Rational value);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial from_form(const LinearForm& form);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  int degree() const;
  void add_term(const Exponents& exponents, const Rational& coeff);

  Rational evaluate(std::span<const Int> point) const;
  /// Substitutes x[j] -> x[perm[j]].
  Polynomial permuted(std::span<const int> perm) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& r);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
  friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }
  Polynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend auto operator<=>(const Polynomial& a, const Polynomial& b) {
    if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
    return a.terms_ <=> b.terms_;
  }

  /// Human-readable expanded form using the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const Polynomial& o) const;

  std::size_t nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// x(x−1)(x−2)/6, the polynomial extension of binom(x, 3) to all integers.
Polynomial binom3(const Polynomial& x);

}  // namespace lrkit
