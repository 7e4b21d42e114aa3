#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace littlewood::setcore {

/// Largest admissible element magnitude. Keeps every pairwise sum well
/// inside the int64 range.
inline constexpr std::int64_t kMaxElementMagnitude = std::int64_t{1} << 48;

/// Largest admissible set size. Keeps E <= N^3 < 2^60.
inline constexpr std::size_t kMaxSetSize = std::size_t{1} << 20;

/// A finite set of integers, stored strictly increasing.
///
/// Immutable after construction; all operations on it are pure functions,
/// so values can be shared freely across threads.
class IntegerSet {
public:
    IntegerSet() = default;

    /// Sorts, deduplicates, and validates the element range.
    static IntegerSet from_values(std::vector<std::int64_t> values);

    /// Accepts an already strictly increasing sequence (validated).
    static IntegerSet from_sorted(std::vector<std::int64_t> sorted_values);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    std::span<const std::int64_t> elements() const noexcept { return elements_; }
    std::int64_t operator[](std::size_t i) const { return elements_[i]; }

    std::int64_t min() const;
    std::int64_t max() const;

    /// max - min; 0 for empty sets and singletons.
    std::int64_t spread() const;

    bool contains(std::int64_t x) const;

    bool operator==(const IntegerSet&) const = default;

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

private:
    explicit IntegerSet(std::vector<std::int64_t> elems) : elements_(std::move(elems)) {}

    std::vector<std::int64_t> elements_;
};

/// The k smallest elements of A (an initial segment, i.e. A cut at some
/// threshold x). Requires 1 <= k <= |A|.
IntegerSet initial_segment(const IntegerSet& A, std::size_t k);

}  // namespace littlewood::setcore
