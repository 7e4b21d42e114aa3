#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "littlewood/integer_set.hpp"

namespace littlewood::setcore {

enum class GenKind {
    interval,
    arithmetic_progression,
    lacunary,
    random_subset,
    union_of_aps,
};

std::string to_string(GenKind kind);
std::optional<GenKind> parse_gen_kind(const std::string& name);

struct ApSpec {
    std::int64_t start = 0;
    std::int64_t step = 1;
    std::size_t length = 1;
};

struct GenParams {
    std::size_t length = 1;          // interval / ap / lacunary / random_subset
    std::int64_t start = 0;          // interval / ap
    std::int64_t step = 1;           // ap
    double ratio = 2.0;              // lacunary: growth factor >= 2
    double density = 0.5;            // random_subset: in (0, 1]
    std::vector<ApSpec> aps;         // union_of_aps
};

/// Deterministic test-set factory. Only random_subset consumes the seed.
IntegerSet generate(GenKind kind, const GenParams& params, std::uint64_t seed);

}  // namespace littlewood::setcore
