#pragma once

#include "lrkit/partition.hpp"

// Independent Littlewood-Richardson oracle: counts LR skew tableaux. Shares
// nothing with the hive engine beyond Partition.
namespace lrkit::oracle {

/// Number of semistandard skew tableaux of shape ν/λ and content μ whose
/// reverse reading word (right to left, top to bottom) is a lattice word.
/// Zero when λ ⊄ ν or |ν| ≠ |λ|+|μ|.
Int lr_tableaux_count(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Compares the count on (λ, μ, ν) with the count on the conjugate triple.
/// The conjugates share the rank max(λ1, μ1, ν1).
bool lr_conjugation_check(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace lrkit::oracle
