#include "lrkit/polynomial.hpp"

#include <sstream>

#include "lrkit/error.hpp"

namespace lrkit {

namespace {

void check_point(std::size_t nvars, std::span<const Int> point) {
  if (point.size() != nvars) throw InvalidArgument("point has the wrong number of coordinates");
}

void check_perm(std::size_t nvars, std::span<const int> perm) {
  if (perm.size() != nvars) throw InvalidArgument("permutation has the wrong length");
  std::vector<bool> seen(nvars);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= nvars || seen[static_cast<std::size_t>(p)]) {
      throw InvalidArgument("not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

Int gcd_abs(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

Rational LinearForm::evaluate(std::span<const Int> point) const {
  check_point(nvars(), point);
  Rational total = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) total += coeffs[i] * Rational(point[i]);
  }
  return total;
}

LinearForm LinearForm::permuted(std::span<const int> perm) const {
  check_perm(nvars(), perm);
  LinearForm out(nvars());
  out.constant = constant;
  for (std::size_t j = 0; j < coeffs.size(); ++j) out.coeffs[static_cast<std::size_t>(perm[j])] = coeffs[j];
  return out;
}

LinearForm LinearForm::normalized() const {
  Int lcm = constant.den();
  for (const auto& c : coeffs) lcm = checked::mul(lcm / std::gcd(lcm, c.den()), c.den());
  std::vector<Int> ints;
  ints.reserve(coeffs.size() + 1);
  for (const auto& c : coeffs) ints.push_back(checked::mul(c.num(), lcm / c.den()));
  ints.push_back(checked::mul(constant.num(), lcm / constant.den()));
  Int g = 0;
  for (Int v : ints) g = gcd_abs(g, v);
  if (g == 0) return LinearForm(nvars());
  LinearForm out(nvars());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] = Rational(ints[i] / g);
  out.constant = Rational(ints.back() / g);
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, Rational value) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::from_form(const LinearForm& form) {
  Polynomial p = constant(form.nvars(), form.constant);
  for (std::size_t i = 0; i < form.nvars(); ++i) {
    if (!form.coeffs[i].is_zero()) p += variable(form.nvars(), i) * form.coeffs[i];
  }
  return p;
}

int Polynomial::degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coeff) {
  if (exponents.size() != nvars_) throw InvalidArgument("exponent vector has the wrong length");
  for (int x : exponents) {
    if (x < 0) throw InvalidArgument("negative exponent");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Polynomial::evaluate(std::span<const Int> point) const {
  check_point(nvars_, point);
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= Rational(point[i]);
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::permuted(std::span<const int> perm) const {
  check_perm(nvars_, perm);
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents moved(nvars_, 0);
    for (std::size_t j = 0; j < nvars_; ++j) moved[static_cast<std::size_t>(perm[j])] = e[j];
    out.add_term(moved, c);
  }
  return out;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw InvalidArgument("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check_compatible(o);
  Polynomial out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw InvalidArgument("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = true;
    for (int x : e) is_const = is_const && x == 0;
    bool unit = mag == Rational(1);
    if (!unit || is_const) out << mag.to_string();
    bool need_star = !unit || is_const;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << names[i];
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

Polynomial binom3(const Polynomial& x) {
  const auto n = x.nvars();
  Polynomial one = Polynomial::constant(n, Rational(1));
  return x * (x - one) * (x - one - one) * Rational(1, 6);
}

}  // namespace lrkit
