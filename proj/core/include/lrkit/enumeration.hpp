#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lrkit/partition.hpp"

namespace lrkit {

enum class Backend {
  Auto,      // closed form where one applies, hives otherwise
  Hive,
  Tableaux,
  Closed,    // gl3 at rank 3, the near-rectangular formula at rank >= 4; throws elsewhere
};

Backend parse_backend(const std::string& name);
std::string backend_name(Backend b);

/// c^ν_{λμ} through the chosen backend. Closed forms are applied after
/// removing the last parts of λ and μ.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, Backend backend = Backend::Auto);

/// Histogram of positive coefficients over all ν for fixed (λ, μ).
struct MultiplicityMultiset {
  std::map<Int, Int> counts;
  Int components = 0;
  Int mult_sum = 0;

  void add(Int coefficient);
  /// Number of ν with coefficient > c.
  Int count_above(Int c) const;
  friend bool operator==(const MultiplicityMultiset&, const MultiplicityMultiset&) = default;
  std::string to_string() const;  // "{1:11, 2:7, 3:3}"
};

nlohmann::json to_json(const MultiplicityMultiset& m);

MultiplicityMultiset multiplicity_multiset(const Partition& lambda, const Partition& mu,
                                           Backend backend = Backend::Auto);

/// #{ν : c^ν_{λμ} > c}.
Int count_above_enum(const Partition& lambda, const Partition& mu, Int c, Backend backend = Backend::Auto);

/// Outcome of comparing a hard-coded piecewise family against enumeration.
struct ScanResult {
  std::string family;
  Int bound = 0;
  std::size_t points = 0;      // integer points visited
  std::size_t compared = 0;    // points where a value was compared
  std::optional<std::string> mismatch;  // first disagreement, if any
  /// Times each piece (and each branch of it) was the reporting piece.
  std::map<std::string, std::vector<std::size_t>> branch_hits;

  bool ok() const { return !mismatch; }
};

nlohmann::json to_json(const ScanResult& r);

/// Exhaustive scan of a family ("gl3", "gl4nr2" or "gl4nr-samples") against
/// `reference` enumeration:
///  - gl3: 0 <= k1, k2, l1, l2 <= bound, 0 <= c <= c_bound, plus equality of
///    the values at (k1, k2, ...) and (k2, k1, ...);
///  - gl4nr2: same ranges at rank 4;
///  - gl4nr-samples: every in-cone point of each sample piece with all
///    coordinates <= bound (c_bound unused).
/// Stops at the first mismatch.
ScanResult verify_family_range(const std::string& family, Int bound, Int c_bound,
                               Backend reference = Backend::Hive);

}  // namespace lrkit
