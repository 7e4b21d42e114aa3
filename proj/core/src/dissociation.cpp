#include "littlewood/dissociation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "littlewood/errors.hpp"

namespace littlewood::setcore {

namespace {

// sums is sorted. Returns true if (sums + x) intersects sums, i.e. adding
// x to the generating set would create a subset-sum collision.
bool shift_collides(const std::vector<std::int64_t>& sums, std::int64_t x) {
    std::size_t i = 0, j = 0;
    while (i < sums.size() && j < sums.size()) {
        const std::int64_t lhs = sums[i];
        const std::int64_t rhs = sums[j] + x;
        if (lhs == rhs) return true;
        if (lhs < rhs) ++i; else ++j;
    }
    return false;
}

std::vector<std::int64_t> merge_shift(const std::vector<std::int64_t>& sums, std::int64_t x) {
    std::vector<std::int64_t> out;
    out.reserve(sums.size() * 2);
    std::size_t i = 0, j = 0;
    while (i < sums.size() && j < sums.size()) {
        if (sums[i] < sums[j] + x) out.push_back(sums[i++]);
        else out.push_back(sums[j++] + x);
    }
    while (i < sums.size()) out.push_back(sums[i++]);
    while (j < sums.size()) out.push_back(sums[j++] + x);
    return out;
}

}  // namespace

bool is_dissociated(const IntegerSet& X) {
    if (X.size() > kDissociationCap) {
        throw capacity_error("is_dissociated: |X| = " + std::to_string(X.size()) +
                             " exceeds the exhaustive limit of " +
                             std::to_string(kDissociationCap) + " (2^30 subset sums)");
    }
    std::vector<std::int64_t> sums = {0};
    for (const std::int64_t x : X) {
        if (shift_collides(sums, x)) return false;
        sums = merge_shift(sums, x);
    }
    return true;
}

IntegerSet greedy_dissociated_subset(const IntegerSet& A) {
    if (A.empty()) throw std::domain_error("greedy_dissociated_subset: empty set");
    std::vector<std::int64_t> kept;
    std::vector<std::int64_t> sums = {0};
    for (const std::int64_t x : A) {
        if (shift_collides(sums, x)) continue;
        if (kept.size() >= kDissociationCap) {
            throw capacity_error(
                "greedy_dissociated_subset: running subset would exceed 2^30 subset sums");
        }
        kept.push_back(x);
        sums = merge_shift(sums, x);
    }
    return IntegerSet::from_sorted(std::move(kept));
}

}  // namespace littlewood::setcore
