#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lrkit/polynomial.hpp"

namespace lrkit {

/// Closed polyhedral cone {x : f(x) >= 0 for every constraint f}.
struct Cone {
  std::vector<LinearForm> constraints;

  bool contains(std::span<const Int> point) const;
  Cone permuted(std::span<const int> perm) const;
  /// Constraints normalized, sorted and deduplicated.
  Cone normalized() const;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

/// m branches selected by selector(x) mod m. A modulus of 1 is a polynomial.
struct QuasiPolynomial {
  Int modulus = 1;
  LinearForm selector;
  std::vector<Polynomial> branches;

  static QuasiPolynomial plain(Polynomial p);
  std::size_t branch_index(std::span<const Int> point) const;
  Rational evaluate(std::span<const Int> point) const;
  QuasiPolynomial permuted(std::span<const int> perm) const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
  friend auto operator<=>(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

struct Piece {
  std::string label;
  Cone cone;
  QuasiPolynomial function;
};

struct PiecewiseFunction {
  std::vector<std::string> variables;
  Cone support;
  std::vector<Piece> pieces;
};

struct Evaluation {
  Int value = 0;
  /// Lowest index of a piece containing the point; empty outside the support.
  std::optional<std::size_t> piece;
};

/// Value of f at an integer point. Checks that every containing piece gives
/// the same value, that points of the support are covered, and that values are
/// nonnegative integers; any failure throws DataIntegrityError naming the
/// point and pieces.
Evaluation eval_piecewise(const PiecewiseFunction& f, std::span<const Int> point);

/// Value of a single piece. Throws InvalidArgument when the point is outside
/// its cone.
Rational eval_piece(const Piece& piece, std::span<const Int> point);

struct GroupElement {
  std::string word;  // "e", "s1", "s2", "s1s2", ...
  std::vector<int> perm;
};

/// Closure of the named generators under composition, identity first, then by
/// word length and generation order.
std::vector<GroupElement> permutation_group(const std::vector<GroupElement>& generators);

struct OrbitExpansion {
  std::vector<Piece> pieces;
  /// One entry per representative.
  std::vector<std::size_t> orbit_sizes;
};

/// Images of every representative under every group element, compared in
/// normalized form and deduplicated. Throws DataIntegrityError if two
/// representatives share an orbit.
OrbitExpansion orbit_expand(const std::vector<Piece>& representatives, const std::vector<GroupElement>& group);

/// Number of ν with c^ν_{λμ} > c for λ = (k1+k2, k2, 0), μ = (l1+l2, l2, 0);
/// variables (k1, k2, l1, l2, c).
const PiecewiseFunction& gl3_count_function();

/// The same count at rank 4 for λ = (k1+k2, k2, k2, 0), μ = (l1+l2, l2, l2, 0),
/// built from the eight orbit representatives.
const PiecewiseFunction& gl4nr2_count_function();
/// The representatives before orbit expansion, and the expansion itself.
const std::vector<Piece>& gl4nr2_representatives();
const OrbitExpansion& gl4nr2_expansion();
/// s1 = (k1 k2) and s2 = (k1 l1)(k2 l2) over (k1, k2, l1, l2, c).
const std::vector<GroupElement>& gl4nr2_group();

/// Number of ν with c^ν_{λμ} > 0 for λ = (k1+k2, k2, k2, 0), μ = (μ1, μ2, μ3, 0)
/// on three sample cones; variables (k1, k2, mu1, mu2, mu3). These do not
/// cover the domain.
const std::vector<Piece>& gl4nr_sample_pieces();
const std::vector<std::string>& gl4nr_sample_variables();

nlohmann::json to_json(const PiecewiseFunction& f);
PiecewiseFunction piecewise_from_json(const nlohmann::json& j);

}  // namespace lrkit
