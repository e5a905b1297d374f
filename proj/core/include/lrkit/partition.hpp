#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrkit/checked.hpp"

namespace lrkit {

/// A weakly decreasing sequence of exactly `rank()` nonnegative integers.
/// Trailing zeros are stored explicitly; two partitions are equal only when
/// they have the same rank and the same parts.
class Partition {
 public:
  /// Throws InvalidArgument for negative or increasing parts, an empty
  /// sequence, and OverflowError when the size does not fit.
  explicit Partition(std::vector<Int> parts);

  /// Pads `parts` with zeros up to `rank`. Rejects sequences longer than
  /// `rank`.
  static Partition padded(std::vector<Int> parts, int rank);
  static Partition zero(int rank);

  /// Parses "5,3,0". With `rank` > 0, missing trailing parts are zero; a
  /// rank of 0 takes the rank from the number of listed parts.
  static Partition parse(std::string_view text, int rank = 0);

  int rank() const { return static_cast<int>(parts_.size()); }
  Int size() const { return size_; }
  Int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  Int first() const { return parts_.front(); }
  Int last() const { return parts_.back(); }
  std::span<const Int> parts() const { return parts_; }

  /// Number of nonzero parts.
  int length() const;
  bool contains(const Partition& inner) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Int> parts_;
  Int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Coordinates in the basis of the first fundamental weight and its dual:
/// (k1, k2) at rank n is the partition (k1+k2, k2^(n-2), 0).
struct FundamentalCoords {
  Int k1 = 0;
  Int k2 = 0;
  int n = 3;
};

struct LRTriple {
  Partition lambda;
  Partition mu;
  Partition nu;

  /// Throws InvalidArgument on mismatched ranks.
  LRTriple(Partition l, Partition m, Partition v);
  bool balanced() const;
  int rank() const { return lambda.rank(); }
};

/// (λ1−λn, λ1−λ(n−1), ..., λ1−λ2, 0).
Partition dual_star(const Partition& lambda);

/// Subtracts the last part from every part.
Partition bar_reduce(const Partition& lambda);

/// λ2 = ... = λ(n−1). Always true for rank ≤ 3.
bool is_near_rectangular(const Partition& lambda);

/// Rank must be 3 or 4.
Partition from_fundamental(const FundamentalCoords& coords);

/// Near-rectangular partition λ1 λ2^(n−2) λn.
Partition near_rectangular(Int first, Int middle, Int last, int rank);

/// Conjugate partition, at the given rank (defaults to its natural length).
Partition conjugate(const Partition& lambda, int rank = 0);

/// All rank-n partitions of `size` with first part at most `max_first`, in
/// lexicographically decreasing order.
std::vector<Partition> partitions_of(Int size, int rank, Int max_first);

/// Every ν with |ν| = |λ|+|μ| and ν1 ≤ λ1+μ1, lexicographically decreasing.
/// This contains every ν with a nonzero coefficient.
std::vector<Partition> enumerate_nu_candidates(const Partition& lambda, const Partition& mu);

}  // namespace lrkit
