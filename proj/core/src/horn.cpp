#include "lrkit/horn.hpp"

#include <cctype>

namespace lrkit {

namespace {

/// Parses "n1+n3 >= l1+l2+m2" style text over l1..l4, m1..m4, n1..n4 and
/// integer constants.
HornInequality parse_inequality(const std::string& text) {
  HornInequality ineq;
  ineq.text = text;
  const auto ge = text.find(">=");
  if (ge == std::string::npos) throw DataIntegrityError("facet without '>=': " + text);
  auto accumulate = [&](const std::string& side, Int sign) {
    std::size_t i = 0;
    Int term_sign = 1;
    while (i < side.size()) {
      char ch = side[i];
      if (ch == ' ') {
        ++i;
      } else if (ch == '+') {
        term_sign = 1;
        ++i;
      } else if (ch == '-') {
        term_sign = -1;
        ++i;
      } else if (ch == 'l' || ch == 'm' || ch == 'n') {
        int block = ch == 'l' ? 0 : ch == 'm' ? 4 : 8;
        int index = side[i + 1] - '1';
        if (index < 0 || index > 3) throw DataIntegrityError("bad variable in facet: " + text);
        ineq.coeffs[static_cast<std::size_t>(block + index)] += sign * term_sign;
        term_sign = 1;
        i += 2;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        Int v = 0;
        while (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i]))) v = v * 10 + (side[i++] - '0');
        ineq.constant += sign * term_sign * v;
        term_sign = 1;
      } else {
        throw DataIntegrityError("bad character in facet: " + text);
      }
    }
  };
  accumulate(text.substr(0, ge), 1);
  accumulate(text.substr(ge + 2), -1);
  return ineq;
}

FacetSystem make_system(std::string name, std::initializer_list<const char*> lines) {
  FacetSystem system{std::move(name), {}};
  for (const char* line : lines) system.inequalities.push_back(parse_inequality(line));
  return system;
}

void require_rank4_last_zero(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.rank() != 4 || mu.rank() != 4 || nu.rank() != 4) throw InvalidArgument("Horn facet systems are rank 4");
  if (lambda.last() != 0 || mu.last() != 0) throw InvalidArgument("λ and μ must have last part 0");
}

Membership evaluate(const FacetSystem& system, const Partition& lambda, const Partition& mu, const Partition& nu) {
  Membership m;
  m.balanced = nu.size() == checked::add(lambda.size(), mu.size());
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    if (!system.inequalities[i].holds(lambda, mu, nu)) m.violated.push_back(i);
  }
  m.member = m.balanced && m.violated.empty();
  return m;
}

}  // namespace

bool HornInequality::holds(const Partition& lambda, const Partition& mu, const Partition& nu) const {
  Int128 total = constant;
  for (int i = 0; i < 4; ++i) {
    total += static_cast<Int128>(coeffs[static_cast<std::size_t>(i)]) * lambda[i];
    total += static_cast<Int128>(coeffs[static_cast<std::size_t>(4 + i)]) * mu[i];
    total += static_cast<Int128>(coeffs[static_cast<std::size_t>(8 + i)]) * nu[i];
  }
  return total >= 0;
}

bool weyl_check(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int n = nu.rank();
  if (lambda.rank() != n || mu.rank() != n) throw InvalidArgument("mismatched ranks");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      if (nu[i + j] > checked::add(lambda[i], mu[j])) return false;
    }
  }
  return true;
}

const FacetSystem& horn4_nr2_facets() {
  static const FacetSystem system = make_system("nr2", {
      "n1 >= n2",
      "n4 >= 0",
      "n3+n4 >= l2+m2",
      "n1+n3 >= l1+l2+m2",
      "n1+n3 >= l2+m1+m2",
      "n2 >= l2+m2",
      "l2+m2 >= n3",
      "n3 >= l2",
      "n3 >= m2",
      "l1+m2 >= n2",
      "l2+m1 >= n2",
  });
  if (system.inequalities.size() != 11) throw DataIntegrityError("nr2 facet list must have 11 entries");
  return system;
}

const FacetSystem& horn4_nr_facets() {
  static const FacetSystem system = make_system("nr", {
      // dominance
      "n1 >= n2", "n2 >= n3", "n3 >= n4", "n4 >= 0",
      "l1 >= l2", "l2 >= 0",
      "m1 >= m2", "m2 >= m3", "m3 >= 0",
      // upper bounds on parts of ν
      "l1+m1 >= n1",
      "l2+m1 >= n2", "l1+m2 >= n2",
      "l2+m2 >= n3", "l1+m3 >= n3",
      "l1 >= n4", "m1 >= n4", "l2+m3 >= n4",
      // lower bounds on parts of ν
      "n1 >= l1", "n1 >= m1", "n1 >= l2+m2",
      "n2 >= m2", "n2 >= l2+m3",
      "n3 >= l2", "n3 >= m3",
      // pair sums
      "n1+n2 >= l1+l2+m2", "n1+n2 >= l2+m1+m2",
      "n1+n3 >= l1+l2+m3", "n1+n3 >= l2+m1+m3",
      "n2+n3 >= l2+m2+m3",
      "n1+n4 >= l2+m1",
      "n2+n4 >= l2+m2",
      "n3+n4 >= l2+m3",
  });
  if (system.inequalities.size() != 32) throw DataIntegrityError("nr facet list must have 32 entries");
  return system;
}

Membership horn4_nr2_member(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_rank4_last_zero(lambda, mu, nu);
  if (!is_near_rectangular(lambda) || !is_near_rectangular(mu)) {
    throw InvalidArgument("nr2 membership needs near-rectangular λ and μ");
  }
  return evaluate(horn4_nr2_facets(), lambda, mu, nu);
}

Membership horn4_nr_member(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_rank4_last_zero(lambda, mu, nu);
  if (!is_near_rectangular(lambda)) throw InvalidArgument("nr membership needs near-rectangular λ");
  return evaluate(horn4_nr_facets(), lambda, mu, nu);
}

std::vector<RayGenerator> hilbert_generators(const std::string& face) {
  auto p = [](std::initializer_list<Int> parts) { return Partition(std::vector<Int>(parts)); };
  auto ray = [&](std::initializer_list<Int> l, std::initializer_list<Int> m, std::initializer_list<Int> v,
                 std::string text) { return RayGenerator{LRTriple(p(l), p(m), p(v)), std::move(text)}; };
  if (face == "nr2") {
    return {
        ray({1, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, "V(1) in V(1)xV(0)"),
        ray({0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, "V(1) in V(0)xV(1)"),
        ray({1, 1, 1, 0}, {0, 0, 0, 0}, {1, 1, 1, 0}, "V(1^3) in V(1^3)xV(0)"),
        ray({0, 0, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 0}, "V(1^3) in V(0)xV(1^3)"),
        ray({1, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0}, "V(1^2) in V(1)xV(1)"),
        ray({1, 0, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}, "V(1^4) in V(1)xV(1^3)"),
        ray({1, 1, 1, 0}, {1, 0, 0, 0}, {1, 1, 1, 1}, "V(1^4) in V(1^3)xV(1)"),
        ray({1, 1, 1, 0}, {1, 1, 1, 0}, {2, 2, 1, 1}, "V(2^2 1^2) in V(1^3)xV(1^3)"),
    };
  }
  if (face == "nr") {
    return {
        ray({1, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, "V(1) in V(1)xV(0)"),
        ray({1, 1, 1, 0}, {0, 0, 0, 0}, {1, 1, 1, 0}, "V(1^3) in V(1^3)xV(0)"),
        ray({0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, "V(1) in V(0)xV(1)"),
        ray({0, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}, "V(1^2) in V(0)xV(1^2)"),
        ray({0, 0, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 0}, "V(1^3) in V(0)xV(1^3)"),
        ray({1, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0}, "V(1^2) in V(1)xV(1)"),
        ray({1, 0, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}, "V(1^4) in V(1)xV(1^3)"),
        ray({1, 1, 1, 0}, {1, 0, 0, 0}, {1, 1, 1, 1}, "V(1^4) in V(1^3)xV(1)"),
        ray({1, 1, 1, 0}, {1, 1, 1, 0}, {2, 2, 1, 1}, "V(2211) in V(1^3)xV(1^3)"),
        ray({2, 1, 1, 0}, {1, 1, 0, 0}, {2, 2, 1, 1}, "V(2211) in V(211)xV(11)"),
        ray({1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, "V(1^3) in V(1)xV(1^2)"),
        ray({1, 1, 1, 0}, {1, 1, 0, 0}, {2, 1, 1, 1}, "V(21^3) in V(1^3)xV(1^2)"),
    };
  }
  throw InvalidArgument("unknown Horn face '" + face + "' (expected nr or nr2)");
}

}  // namespace lrkit
