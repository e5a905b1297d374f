#pragma once

#include <utility>
#include <vector>

#include "lrkit/partition.hpp"

namespace lrkit {

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntegerInterval {
  Int lo = 0;
  Int hi = -1;
  Int cardinality() const { return hi < lo ? 0 : checked::add(checked::sub(hi, lo), 1); }
  bool empty() const { return hi < lo; }
};

/// The interval whose integer points count c^ν_{λμ} at rank 3:
/// [max(μ1−λ2, μ2, ν1−λ1, μ1−ν3, ν2−λ2, μ1+μ2−ν2), min(μ1, ν1−λ2, μ1+μ2−ν3)].
/// Requires rank 3 and λ3 = μ3 = 0.
IntegerInterval gl3_interval(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^ν_{λμ} at rank 3 from the interval; 0 for unbalanced triples.
Int gl3_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^ν_{λμ} > c, decided by the eighteen linear inequalities and |ν| = |λ|+|μ|.
bool gl3_exceeds(const Partition& lambda, const Partition& mu, const Partition& nu, Int c);

/// Whether ν has the shape ν1 ν2 (λ2+μ2)^(n−4) ν(n−1) νn with
/// ν1 ≥ ν2 ≥ λ2+μ2 ≥ ν(n−1) ≥ νn, the only shapes with a nonzero coefficient
/// when λ and μ are near-rectangular.
bool nr_shape(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^ν_{λμ} for near-rectangular λ, μ of rank n ≥ 4 with λn = μn = 0, as the
/// cardinality of [M, m] with
///   M = max(0, λ2+μ1−ν1, νn−μ2),
///   m = min(λ1+μ1−ν1, λ2+μ1−ν2, ν(n−1)+νn−λ2−μ2, ν(n−1)−μ2).
/// Independent of n. Rejects inputs with a nonzero last part rather than
/// shifting ν.
Int nr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Every ν of the stable shape with a positive coefficient, paired with it,
/// lexicographically decreasing in ν.
std::vector<std::pair<Partition, Int>> nr_support(const Partition& lambda, const Partition& mu);

/// Number of distinct isotypic components in V((2k) k^(n−2)) ⊗ V((2l) l^(n−2)),
/// any n ≥ 4. Symmetric in (k, l).
Int isotypic_count_selfdual_family(Int k, Int l);

/// The cubic branch of the count above (used when 2l ≥ k, l ≤ k), evaluated in
/// exact rationals and asserted integral. Exposed so both branches can be
/// compared on their common boundary.
Int isotypic_count_cubic_branch(Int k, Int l);

/// Number of self-dual components (ν1+ν4 = ν2+ν3 at rank 4) in the same
/// product: (min(k,l)+1)^2.
Int selfdual_component_count(Int k, Int l);

/// Counts ν ∈ Z^4 meeting the explicit component conditions for the
/// (2k)k^2 ⊗ (2l)l^2 family (l ≤ k after symmetrizing):
///   |ν| = 4(k+l), ν1 ≥ ν2, ν4 ≥ 0, ν3+ν4 ≥ k+l, ν1+ν3 ≥ 3k+l,
///   k+2l ≥ ν2 ≥ k+l ≥ ν3 ≥ k.
/// With `self_dual`, also requires ν1+ν4 = ν2+ν3.
Int selfdual_family_condition_count(Int k, Int l, bool self_dual);

}  // namespace lrkit
