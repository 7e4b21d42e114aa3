#pragma once

#include <cstdint>
#include <vector>

#include "littlewood/energy.hpp"
#include "littlewood/integer_set.hpp"
#include "littlewood/segment_chain.hpp"

namespace littlewood::bounds {

enum class BoundFormula { prop31, cor51 };

struct BoundReport {
    std::size_t J = 0;
    double b = 0.0;
    double lambda_or_eta = 0.0;
    double omega_sum = 0.0;    // sum of omega[A_i]^(1/2), compensated
    double bound_value = 0.0;
    BoundFormula formula = BoundFormula::prop31;
    double gg_constant = 0.0;  // the suppressed leading factor for cor51
};

/// (1 - e^{-b}) (J - b sqrt(2)/(sqrt(lambda) - 1) * sum_i omega[A_i]^{1/2}).
/// A certified lower bound for ||1_A hat||_1 over a geometric chain; may be
/// negative (vacuous), reported as computed.
BoundReport prop31_bound(const SegmentChain& chain, double b);

/// The unnormalised bracket J - c_abs eta^{-1} sum_i omega[A_i]^{1/2} for an
/// eta_inverse chain. The absolute constant in front is reported separately
/// as 1 - e^{-1} (the b = 1, 1/lambda = 1 - eta specialisation).
BoundReport cor51_bound(const SegmentChain& chain, double c_abs);

/// Rearrangement bound n m^2 (1 - m/(3n)) + m/3 for E(A, B) with
/// |A| = n >= m = |B|. Always an integer; equality for nested intervals.
setcore::Energy gabriel_bound(std::size_t n, std::size_t m);

/// Verifies r(a_i + b_j) <= 1 + min(n - i, j - 1) + min(i - 1, m - j) for
/// every rank pair, where i ranks A (1..n), j ranks B (1..m), m <= n.
/// A regression oracle for the counting code; true for correct counts.
bool ordering_bound_check(const setcore::IntegerSet& A, const setcore::IntegerSet& B);

enum class StructureReason {
    chain,                    // found via the eta chain
    trivial_delta_over_k,     // delta/K <= N^{-1/2}: any set qualifies
    trivial_small_delta,      // delta <= 1/log N: the full set qualifies
};

struct StructureResult {
    setcore::IntegerSet A_prime;
    double omega = 0.0;         // max omega over the chain
    std::size_t segment_index = 0;  // 1-based; 0 for trivial returns
    double eta_used = 0.0;
    double delta = 0.0;
    double K = 0.0;
    std::vector<double> all_omegas;
    StructureReason reason = StructureReason::chain;
    bool eta_clamped = false;
};

/// Builds the eta_inverse chain with eta = c_eta delta / K (clamped to 1/4)
/// and returns the segment maximising the normalised energy, together with
/// the whole omega profile. No threshold is applied; callers compare.
StructureResult find_structured_subset(const setcore::IntegerSet& A, double K, double delta,
                                       double c_eta = 0.25);

}  // namespace littlewood::bounds
