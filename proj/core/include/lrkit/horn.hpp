#pragma once

#include <array>
#include <string>
#include <vector>

#include "lrkit/partition.hpp"

namespace lrkit {

/// Σ coeffs[i]·x[i] + constant ≥ 0 over x = (λ1..λ4, μ1..μ4, ν1..ν4).
struct HornInequality {
  std::array<Int, 12> coeffs{};
  Int constant = 0;
  std::string text;

  bool holds(const Partition& lambda, const Partition& mu, const Partition& nu) const;
};

/// An explicit facet list for a near-rectangular face of the rank-4 Horn
/// cone. Compound min/max conditions are expanded into atomic inequalities so
/// that a violation can be reported by index.
struct FacetSystem {
  std::string name;
  std::vector<HornInequality> inequalities;
};

struct Membership {
  bool member = false;
  bool balanced = false;
  /// 0-based indices into FacetSystem::inequalities, ascending.
  std::vector<std::size_t> violated;
};

/// A triple spanning an extremal ray of a face, with a human-readable
/// description of the module inclusion it encodes.
struct RayGenerator {
  LRTriple triple;
  std::string description;
};

/// ν(i+j−1) ≤ λi + μj whenever i+j−1 ≤ n.
bool weyl_check(const Partition& lambda, const Partition& mu, const Partition& nu);

/// The eleven inequalities for λ, μ both near-rectangular (last part 0).
const FacetSystem& horn4_nr2_facets();

/// The 32 inequalities for λ near-rectangular and μ arbitrary (last parts 0).
const FacetSystem& horn4_nr_facets();

/// Rank 4, λ and μ near-rectangular with last part 0. Membership is
/// equivalent to c^ν_{λμ} > 0.
Membership horn4_nr2_member(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Rank 4, λ near-rectangular, both λ and μ with last part 0.
Membership horn4_nr_member(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Hilbert basis generators: 8 for "nr2", 12 for "nr". Throws
/// InvalidArgument for any other face name.
std::vector<RayGenerator> hilbert_generators(const std::string& face);

}  // namespace lrkit
