#pragma once

#include <cstddef>
#include <vector>

#include "littlewood/integer_set.hpp"

namespace littlewood::bounds {

enum class ChainScheme {
    lambda_geometric,  // |A_{j+1}| >= lambda |A_j|, lambda > 1
    eta_inverse,       // |A_j| <= (1 - eta) |A_{j+1}|, eta in (0, 1/4]
};

/// Nested initial segments A_1 c A_2 c ... c A_J of a base set, with their
/// sizes and normalised additive energies.
class SegmentChain {
public:
    SegmentChain(setcore::IntegerSet base, std::vector<std::size_t> sizes,
                 std::vector<double> omegas, ChainScheme scheme, double lambda_or_eta,
                 double delta);

    const setcore::IntegerSet& base() const noexcept { return base_; }
    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    const std::vector<double>& omegas() const noexcept { return omegas_; }
    std::size_t J() const noexcept { return sizes_.size(); }
    ChainScheme scheme() const noexcept { return scheme_; }

    double lambda() const;  // lambda_geometric chains only
    double eta() const;     // eta_inverse chains only
    double delta() const;   // eta_inverse chains only

    setcore::IntegerSet segment(std::size_t j) const;  // 1-based

    /// J / (log N / log lambda), the growth-rate diagnostic for geometric
    /// chains (tends to 1 from above as N grows).
    double j_lower_ratio() const;

private:
    setcore::IntegerSet base_;
    std::vector<std::size_t> sizes_;
    std::vector<double> omegas_;
    ChainScheme scheme_;
    double lambda_or_eta_;
    double delta_;
};

/// Seed with the floor(log N) smallest elements, then grow by
/// ceil(lambda * prev) while that still fits inside A. Natural log.
SegmentChain build_chain_lambda(const setcore::IntegerSet& A, double lambda);

/// Seed with the floor(N^(1-delta)) smallest elements, then grow by
/// ceil(prev / (1 - eta)) while that still fits inside A.
SegmentChain build_chain_eta(const setcore::IntegerSet& A, double delta, double eta);

}  // namespace littlewood::bounds
