#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "littlewood/integer_set.hpp"

namespace littlewood::setcore {

/// Quadruple counts are held in 128 bits even though N <= 2^20 keeps
/// E <= N^3 < 2^60 inside 64 bits.
using Energy = unsigned __int128;

std::string energy_to_string(Energy e);
std::uint64_t energy_to_u64(Energy e);

/// r(x) = number of ordered pairs (a, b) in A x B with a + b = x.
///
/// Sum of all counts is |A||B|; sum of squared counts is E(A, B).
class RepresentationProfile {
public:
    static RepresentationProfile of_sum(const IntegerSet& A, const IntegerSet& B);

    std::int64_t count(std::int64_t sum_value) const;
    Energy total_pairs() const;
    Energy sum_of_squares() const;

    /// Sum values with nonzero count, ascending.
    std::vector<std::int64_t> support() const;

private:
    // Dense over [offset, offset + counts.size()) when the sum range is
    // narrow enough, hashed otherwise.
    bool dense_ = false;
    std::int64_t offset_ = 0;
    std::vector<std::uint32_t> dense_counts_;
    std::unordered_map<std::int64_t, std::uint32_t> sparse_counts_;
};

struct EnergyReport {
    Energy energy = 0;      // E(B): quadruples b1 + b2 = b3 + b4
    double omega = 0.0;     // E / N^3, in (0, 1]
    std::size_t size = 0;   // N
};

/// Additive energy E(B) = #{(b1,b2,b3,b4) : b1 + b2 = b3 + b4}, computed
/// as sum_x r(x)^2 over the representation profile of B + B.
EnergyReport additive_energy(const IntegerSet& B);

/// E(A, B) = #{(a1,b1,a2,b2) : a1 + b1 = a2 + b2}. Symmetric in A, B.
Energy cross_energy(const IntegerSet& A, const IntegerSet& B);

}  // namespace littlewood::setcore
