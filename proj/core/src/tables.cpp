#include "lrkit/piecewise.hpp"

#include <array>

#include "lrkit/error.hpp"

namespace lrkit {

namespace {

constexpr std::size_t kVars = 5;

Polynomial var(std::size_t i) { return Polynomial::variable(kVars, i); }
Polynomial num(Int p, Int q = 1) { return Polynomial::constant(kVars, Rational(p, q)); }

/// Builds the form Σ c_i x_i + k from five integer coefficients.
LinearForm form(std::array<Int, kVars> c, Int k = 0) {
  LinearForm f(kVars);
  for (std::size_t i = 0; i < kVars; ++i) f.coeffs[i] = Rational(c[i]);
  f.constant = Rational(k);
  return f;
}

Cone with_support(const Cone& support, std::vector<LinearForm> extra) {
  Cone c = support;
  c.constraints.insert(c.constraints.end(), extra.begin(), extra.end());
  return c;
}

// Variables (k1, k2, l1, l2, c).
const Polynomial k1 = var(0), k2 = var(1), l1 = var(2), l2 = var(3), c = var(4);

Cone nr2_support() {
  return Cone{{form({0, 0, 0, 0, 1}), form({1, 0, 0, 0, -1}), form({0, 1, 0, 0, -1}), form({0, 0, 1, 0, -1}),
               form({0, 0, 0, 1, -1})}};
}

PiecewiseFunction build_gl3() {
  const Polynomial half = num(1, 2);
  const Polynomial ks = k1 + k2, ls = l1 + l2;
  Polynomial p1 = num(2) * c * c - c * (ks + ls + num(2)) - half * (ks - ls) * (ks - ls) + k1 * k2 + l1 * l2 +
                  half * (ks + ls) + num(1);
  Polynomial p2 = num(3) * c * c - num(3) * c * (ks + num(1)) + half * ks * ks + k1 * k2 + num(3, 2) * ks + num(1);
  Polynomial p3 = num(3) * c * c - num(3) * c * (ls + num(1)) + half * ls * ls + l1 * l2 + num(3, 2) * ls + num(1);
  Polynomial p4 = num(5, 2) * c * c - c * (num(2) * ks + l1 + num(5, 2)) + k1 * k2 + ks * (l1 + num(1)) -
                  half * l1 * (l1 - num(1)) + num(1);
  Polynomial p5 = num(5, 2) * c * c - c * (num(2) * ks + l2 + num(5, 2)) + k1 * k2 + ks * (l2 + num(1)) -
                  half * l2 * (l2 - num(1)) + num(1);
  Polynomial p6 = num(5, 2) * c * c - c * (k1 + num(2) * ls + num(5, 2)) + l1 * l2 + ls * (k1 + num(1)) -
                  half * k1 * (k1 - num(1)) + num(1);
  Polynomial p7 = num(5, 2) * c * c - c * (k2 + num(2) * ls + num(5, 2)) + l1 * l2 + ls * (k2 + num(1)) -
                  half * k2 * (k2 - num(1)) + num(1);

  // k1+k2 >= l1+c reads (1,1,-1,0,-1).
  const LinearForm ks_ge_l1 = form({1, 1, -1, 0, -1}), ks_ge_l2 = form({1, 1, 0, -1, -1});
  const LinearForm ls_ge_k1 = form({-1, 0, 1, 1, -1}), ls_ge_k2 = form({0, -1, 1, 1, -1});
  auto flip = [](LinearForm f) {
    for (auto& x : f.coeffs) x = -x;
    f.constant = -f.constant;
    return f;
  };

  PiecewiseFunction f;
  f.variables = {"k1", "k2", "l1", "l2", "c"};
  f.support = nr2_support();
  auto add = [&](const char* label, std::vector<LinearForm> cone, Polynomial p) {
    f.pieces.push_back({label, with_support(f.support, std::move(cone)), QuasiPolynomial::plain(std::move(p))});
  };
  add("C1", {ks_ge_l1, ks_ge_l2, ls_ge_k1, ls_ge_k2}, p1);
  add("C2", {flip(ks_ge_l1), flip(ks_ge_l2)}, p2);
  add("C3", {flip(ls_ge_k1), flip(ls_ge_k2)}, p3);
  add("C4", {ks_ge_l1, flip(ks_ge_l2)}, p4);
  add("C5", {ks_ge_l2, flip(ks_ge_l1)}, p5);
  add("C6", {ls_ge_k1, flip(ls_ge_k2)}, p6);
  add("C7", {ls_ge_k2, flip(ls_ge_k1)}, p7);
  return f;
}

std::vector<Piece> build_gl4nr2_representatives() {
  const Cone support = nr2_support();
  auto piece = [&](const char* label, std::vector<LinearForm> cone, Polynomial p) {
    return Piece{label, with_support(support, std::move(cone)), QuasiPolynomial::plain(std::move(p))};
  };
  // Atomic constraints, each ">= 0".
  const LinearForm k1c_ge_ls = form({1, 0, -1, -1, 1});   // l1+l2 <= k1+c
  const LinearForm k2c_ge_ls = form({0, 1, -1, -1, 1});   // l1+l2 <= k2+c
  const LinearForm ls_ge_k1c = form({-1, 0, 1, 1, -1});   // l1+l2 >= k1+c
  const LinearForm ls_ge_k2c = form({0, -1, 1, 1, -1});   // l1+l2 >= k2+c
  const LinearForm k1_ge_l1 = form({1, 0, -1, 0, 0}), k1_ge_l2 = form({1, 0, 0, -1, 0});
  const LinearForm k2_ge_l1 = form({0, 1, -1, 0, 0}), k2_ge_l2 = form({0, 1, 0, -1, 0});
  const LinearForm l1_ge_k2 = form({0, -1, 1, 0, 0}), l2_ge_k2 = form({0, -1, 0, 1, 0});
  const LinearForm ks_ge_ls = form({1, 1, -1, -1, 0}), ls_ge_ks = form({-1, -1, 1, 1, 0});

  const Polynomial p1 = num(-1, 2) * (-l2 + c - num(1)) * (-l1 + c - num(1)) * (-l1 - l2 + num(2) * c - num(2));
  const Polynomial p16 = p1 - binom3(-k2 + l1 + l2 - c + num(2));
  const Polynomial p2 = p16 - binom3(-k1 + l1 + l2 - c + num(2));
  const Polynomial p19 = p2 + binom3(-k2 + l1 + num(1));
  const Polynomial p21 = p16 + binom3(-k2 + l1 + num(1));
  const Polynomial p29 = p19 + binom3(-k2 + l2 + num(1));
  const Polynomial p27 = p29 + binom3(-k1 - k2 + l1 + l2 + num(1));
  const Polynomial p36 = p21 + binom3(-k2 + l2 + num(1));

  return {
      piece("C1", {k1c_ge_ls, k2c_ge_ls}, p1),
      piece("C16", {k1c_ge_ls, ls_ge_k2c, k2_ge_l1, k2_ge_l2}, p16),
      piece("C2", {ls_ge_k1c, ls_ge_k2c, k1_ge_l1, k1_ge_l2, k2_ge_l1, k2_ge_l2}, p2),
      piece("C19", {ls_ge_k1c, k1_ge_l1, l1_ge_k2, k2_ge_l2}, p19),
      piece("C21", {k1c_ge_ls, l1_ge_k2, k2_ge_l2}, p21),
      piece("C29", {ks_ge_ls, ls_ge_k1c, l1_ge_k2, l2_ge_k2}, p29),
      piece("C27", {ls_ge_ks, k1_ge_l1, k1_ge_l2}, p27),
      piece("C36", {k1c_ge_ls, l1_ge_k2, l2_ge_k2}, p36),
  };
}

std::vector<Piece> build_gl4nr_samples() {
  // Variables (k1, k2, mu1, mu2, mu3).
  const Polynomial& m1 = l1;
  const Polynomial& m2 = l2;
  const Polynomial& m3 = c;
  const Polynomial ks = k1 + k2;
  const Polynomial p =
      m3 * num(1, 2) *
          (m2 * (num(2) * m1 - m2 + num(1)) + num(2) * (m1 + num(1)) - (m3 + num(1)) * (ks + m1 - m2 + num(2))) -
      (m2 + num(1)) * num(1, 6) *
          (num(3) * (k1 * k1 + k2 * k2) - num(3) * ks * (num(2) * m1 + num(1)) + num(3) * m1 * m1 +
           num(2) * m2 * m2 - num(3) * m1 + num(4) * m2 - num(6));

  const std::vector<LinearForm> domain = {form({1, 0, 0, 0, 0}), form({0, 1, 0, 0, 0}), form({0, 0, 1, -1, 0})};
  auto cone = [&](std::vector<LinearForm> extra) { return with_support(Cone{domain}, std::move(extra)); };

  Piece first{"P",
              cone({form({-1, 0, 1, 0, -1}), form({0, -1, 1, 0, -1}), form({0, 0, 0, 1, -1}),
                    form({1, 1, -1, -1, 1}), form({0, 0, 0, 0, 1})}),
              QuasiPolynomial::plain(p)};

  const Polynomial x = ks - m1 - m2 + m3;
  const Polynomial y = num(-2) * ks + num(2) * m1 + num(2) * m2 + num(4) * m3 + num(3);
  QuasiPolynomial parity;
  parity.modulus = 2;
  parity.selector = form({1, 1, 1, 1, 1});
  parity.branches = {p + num(1, 24) * x * (num(2) + x * y), p + num(1, 24) * (x - num(1)) * (x + num(1)) * y};
  Piece second{"P+parity",
               cone({form({-1, -1, 1, 1, -1}), form({-1, 1, 1, -1, -1}), form({0, 1, 0, -1, 1}),
                     form({1, -1, 1, -1, -1}), form({1, 0, 0, -1, 1}), form({1, 1, -1, 0, 0}),
                     form({0, 0, 0, 0, 1})}),
               parity};

  Piece third{"P+binom",
              cone({form({-1, 0, 1, 0, 0}), form({0, -1, 1, 0, -1}), form({0, 0, 0, 1, -1}), form({0, 1, 0, -1, 0}),
                    form({1, 0, -1, 0, 1})}),
              QuasiPolynomial::plain(p + binom3(k1 - m1 + m3 + num(1)))};
  return {first, second, third};
}

}  // namespace

const PiecewiseFunction& gl3_count_function() {
  static const PiecewiseFunction f = build_gl3();
  return f;
}

const std::vector<GroupElement>& gl4nr2_group() {
  static const std::vector<GroupElement> group =
      permutation_group({{"s1", {1, 0, 2, 3, 4}}, {"s2", {2, 3, 0, 1, 4}}});
  return group;
}

const std::vector<Piece>& gl4nr2_representatives() {
  static const std::vector<Piece> reps = build_gl4nr2_representatives();
  return reps;
}

const OrbitExpansion& gl4nr2_expansion() {
  static const OrbitExpansion expansion = [] {
    const auto& group = gl4nr2_group();
    if (group.size() != 8) throw DataIntegrityError("<s1,s2> should have order 8");
    OrbitExpansion e = orbit_expand(gl4nr2_representatives(), group);
    if (e.pieces.size() != 36) {
      throw DataIntegrityError("GL4 near-rectangular table expands to " + std::to_string(e.pieces.size()) +
                               " pieces, expected 36");
    }
    const std::vector<int> s1 = {1, 0, 2, 3, 4};
    std::size_t fixed = 0;
    for (const auto& p : e.pieces) {
      if (p.cone.permuted(s1).normalized() == p.cone && p.function.permuted(s1) == p.function) ++fixed;
    }
    if (fixed != 12) {
      throw DataIntegrityError("expected 12 pieces fixed by swapping k1 and k2, found " + std::to_string(fixed));
    }
    return e;
  }();
  return expansion;
}

const PiecewiseFunction& gl4nr2_count_function() {
  static const PiecewiseFunction f = [] {
    PiecewiseFunction out;
    out.variables = {"k1", "k2", "l1", "l2", "c"};
    out.support = nr2_support();
    out.pieces = gl4nr2_expansion().pieces;
    return out;
  }();
  return f;
}

const std::vector<Piece>& gl4nr_sample_pieces() {
  static const std::vector<Piece> pieces = build_gl4nr_samples();
  return pieces;
}

const std::vector<std::string>& gl4nr_sample_variables() {
  static const std::vector<std::string> names = {"k1", "k2", "mu1", "mu2", "mu3"};
  return names;
}

}  // namespace lrkit
