#pragma once

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lrkit/partition.hpp"

namespace lrkit {

/// Vertex of the hive triangle: `row` counts down from the apex (0..n),
/// `col` runs left to right within the row (0..row).
///
/// Boundary convention: the bottom-left corner carries 0; the left edge reads
/// 0, λ1, λ1+λ2, ..., |λ| going up to the apex; the right edge continues
/// |λ|+μ1, ..., |λ|+|μ| going down; the bottom edge reads 0, ν1, ν1+ν2, ...,
/// |ν| from left to right.
struct Vertex {
  int row = 0;
  int col = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// The three unit-rhombus orientations, named by the direction of the shared
/// (short) diagonal: R1 runs down-left, R2 is horizontal, R3 runs down-right.
enum class RhombusKind { R1, R2, R3 };

/// b + c >= a + d, with b and c the obtuse vertices.
struct RhombusConstraint {
  RhombusKind kind;
  Vertex a, b, c, d;
};

/// A (possibly partial) vertex labelling of a size-n hive triangle.
class Hive {
 public:
  explicit Hive(int n);

  int size() const { return n_; }
  static int vertex_count(int n) { return (n + 1) * (n + 2) / 2; }
  static int index(Vertex v) { return v.row * (v.row + 1) / 2 + v.col; }

  bool is_set(Vertex v) const { return labels_[static_cast<std::size_t>(index(v))].has_value(); }
  Int at(Vertex v) const;
  void set(Vertex v, Int value) { labels_[static_cast<std::size_t>(index(v))] = value; }
  void clear(Vertex v) { labels_[static_cast<std::size_t>(index(v))].reset(); }
  bool complete() const;

  /// Edge label: label(to) − label(from). Derived, never stored.
  Int edge(Vertex from, Vertex to) const { return checked::sub(at(to), at(from)); }

  /// True when every label is set and every rhombus inequality holds.
  bool valid() const;

  /// One row of labels per line, apex first; unset labels print as '.'.
  std::string to_text() const;

  friend bool operator==(const Hive&, const Hive&) = default;

 private:
  int n_;
  std::vector<std::optional<Int>> labels_;
};

std::ostream& operator<<(std::ostream& os, const Hive& h);

/// Labels all 3n boundary vertices from the partial sums of λ, μ, ν. Interior
/// vertices stay unset. Throws InvalidArgument on mismatched ranks or an
/// unbalanced triple.
Hive hive_boundary(const Partition& lambda, const Partition& mu, const Partition& nu);

/// The 3n(n−1)/2 rhombus inequalities of a size-n hive.
std::vector<RhombusConstraint> rhombus_constraints(int n);

/// Number of hives with the given boundary, which is the Littlewood-Richardson
/// coefficient c^ν_{λμ}. Zero for unbalanced triples.
Int count_hives(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Calls `visit` on every hive with the given boundary, in increasing
/// lexicographic order of the interior labels (row-major from the apex).
void enumerate_hives(const Partition& lambda, const Partition& mu, const Partition& nu,
                     const std::function<void(const Hive&)>& visit);

/// Restricts a hive of size n >= 4 whose λ and μ boundaries are
/// near-rectangular with zero last part to the size-4 hive assembled from the
/// north corner (4 triangles), the south-east corner (4 triangles) and the
/// south-west corner (7 triangles). Edge labels inside those regions are
/// preserved. The result has boundary (λ1,λ2,λ2,0), (μ1,μ2,μ2,0),
/// (ν1,ν2,ν(n−1),νn).
Hive restrict_hive(const Hive& hive);

/// Reads λ, μ, ν back from a hive's boundary labels.
LRTriple boundary_triple(const Hive& hive);

}  // namespace lrkit
