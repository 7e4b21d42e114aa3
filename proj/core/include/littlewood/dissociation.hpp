#pragma once

#include "littlewood/integer_set.hpp"

namespace littlewood::setcore {

/// Exhaustive subset-sum check caps; 2^30 sums is the hard memory/time wall.
inline constexpr std::size_t kDissociationCap = 30;

/// True iff all 2^|X| subset sums of X are pairwise distinct.
/// Exhaustive check; rejects |X| > 30.
bool is_dissociated(const IntegerSet& X);

/// Greedy lower bound for the dimension of A (largest dissociated subset):
/// scan A in increasing order, keep each element whose addition leaves the
/// running subset-sum set collision-free.
IntegerSet greedy_dissociated_subset(const IntegerSet& A);

}  // namespace littlewood::setcore
