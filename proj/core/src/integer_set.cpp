#include "littlewood/integer_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "littlewood/errors.hpp"

namespace littlewood::setcore {

namespace {

void validate(const std::vector<std::int64_t>& elems) {
    if (elems.size() > kMaxSetSize) {
        throw capacity_error("IntegerSet: size " + std::to_string(elems.size()) +
                             " exceeds the 2^20 element cap");
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] > kMaxElementMagnitude || elems[i] < -kMaxElementMagnitude) {
            throw capacity_error("IntegerSet: element " + std::to_string(elems[i]) +
                                 " exceeds the |n| <= 2^48 magnitude cap");
        }
        if (i > 0 && elems[i] <= elems[i - 1]) {
            throw std::domain_error("IntegerSet: elements must be strictly increasing");
        }
    }
}

}  // namespace

IntegerSet IntegerSet::from_values(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    validate(values);
    return IntegerSet(std::move(values));
}

IntegerSet IntegerSet::from_sorted(std::vector<std::int64_t> sorted_values) {
    validate(sorted_values);
    return IntegerSet(std::move(sorted_values));
}

std::int64_t IntegerSet::min() const {
    if (elements_.empty()) throw std::domain_error("IntegerSet::min: empty set");
    return elements_.front();
}

std::int64_t IntegerSet::max() const {
    if (elements_.empty()) throw std::domain_error("IntegerSet::max: empty set");
    return elements_.back();
}

std::int64_t IntegerSet::spread() const {
    if (elements_.size() < 2) return 0;
    return elements_.back() - elements_.front();
}

bool IntegerSet::contains(std::int64_t x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

IntegerSet initial_segment(const IntegerSet& A, std::size_t k) {
    if (k < 1 || k > A.size()) {
        throw std::domain_error("initial_segment: k = " + std::to_string(k) +
                                " out of range [1, " + std::to_string(A.size()) + "]");
    }
    auto elems = A.elements();
    return IntegerSet::from_sorted({elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(k)});
}

}  // namespace littlewood::setcore
