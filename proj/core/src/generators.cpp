#include "littlewood/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "littlewood/errors.hpp"

namespace littlewood::setcore {

std::string to_string(GenKind kind) {
    switch (kind) {
        case GenKind::interval: return "interval";
        case GenKind::arithmetic_progression: return "arithmetic_progression";
        case GenKind::lacunary: return "lacunary";
        case GenKind::random_subset: return "random_subset";
        case GenKind::union_of_aps: return "union_of_aps";
    }
    return "?";
}

std::optional<GenKind> parse_gen_kind(const std::string& name) {
    if (name == "interval") return GenKind::interval;
    if (name == "arithmetic_progression" || name == "ap") return GenKind::arithmetic_progression;
    if (name == "lacunary") return GenKind::lacunary;
    if (name == "random_subset" || name == "random") return GenKind::random_subset;
    if (name == "union_of_aps" || name == "union-aps") return GenKind::union_of_aps;
    return std::nullopt;
}

namespace {

std::vector<std::int64_t> make_ap(std::int64_t start, std::int64_t step, std::size_t length) {
    if (length < 1) throw std::domain_error("generate: length must be >= 1");
    if (step == 0) throw std::domain_error("generate: AP step must be nonzero");
    std::vector<std::int64_t> out;
    out.reserve(length);
    std::int64_t v = start;
    for (std::size_t i = 0; i < length; ++i, v += step) out.push_back(v);
    return out;
}

}  // namespace

IntegerSet generate(GenKind kind, const GenParams& params, std::uint64_t seed) {
    switch (kind) {
        case GenKind::interval:
            return IntegerSet::from_values(make_ap(params.start, 1, params.length));

        case GenKind::arithmetic_progression:
            return IntegerSet::from_values(make_ap(params.start, params.step, params.length));

        case GenKind::lacunary: {
            if (params.length < 1) throw std::domain_error("generate: length must be >= 1");
            if (params.ratio < 2.0) throw std::domain_error("generate: lacunary ratio must be >= 2");
            std::vector<std::int64_t> out;
            out.reserve(params.length);
            std::int64_t v = 1;
            for (std::size_t i = 0; i < params.length; ++i) {
                out.push_back(v);
                if (i + 1 < params.length) {
                    const double next = std::ceil(static_cast<double>(v) * params.ratio);
                    if (next > static_cast<double>(kMaxElementMagnitude)) {
                        throw capacity_error("generate: lacunary element exceeds the 2^48 cap");
                    }
                    v = static_cast<std::int64_t>(next);
                }
            }
            return IntegerSet::from_sorted(std::move(out));
        }

        case GenKind::random_subset: {
            if (params.length < 1) throw std::domain_error("generate: length must be >= 1");
            if (!(params.density > 0.0 && params.density <= 1.0)) {
                throw std::domain_error("generate: density must lie in (0, 1]");
            }
            const auto span = static_cast<std::uint64_t>(
                std::ceil(static_cast<double>(params.length) / params.density));
            if (span > static_cast<std::uint64_t>(kMaxElementMagnitude)) {
                throw capacity_error("generate: random window exceeds the 2^48 cap");
            }
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::uint64_t> dist(0, span - 1);
            std::unordered_set<std::int64_t> picked;
            picked.reserve(params.length * 2);
            while (picked.size() < params.length) {
                picked.insert(static_cast<std::int64_t>(dist(rng)));
            }
            return IntegerSet::from_values({picked.begin(), picked.end()});
        }

        case GenKind::union_of_aps: {
            if (params.aps.empty()) throw std::domain_error("generate: union_of_aps needs >= 1 AP");
            std::vector<std::int64_t> out;
            for (const auto& ap : params.aps) {
                auto part = make_ap(ap.start, ap.step, ap.length);
                out.insert(out.end(), part.begin(), part.end());
            }
            return IntegerSet::from_values(std::move(out));
        }
    }
    throw std::domain_error("generate: unknown kind");
}

}  // namespace littlewood::setcore
