#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "littlewood/segment_chain.hpp"
#include "littlewood/supported_function.hpp"

namespace littlewood::mps {

using spectral::SupportedFunction;

/// Parameters of the damped test-function construction.
///
/// b is the damping exponent; c is always derived as 1 - e^{-b} and never
/// set independently. M is the working grid (power of two), M_t <= M/2 the
/// coefficient window [-M_t, 0] kept for constructed factors.
struct MPSParams {
    double b = 1.0;
    std::size_t M = 0;    // 0: resolve from the input spread
    std::size_t M_t = 0;  // 0: resolve to M / 2
    double tol = 1e-6;

    /// True when M came from the spread-based default rather than the
    /// caller. Defaulted grids may be doubled until the certificate
    /// accepts; explicitly pinned grids are never second-guessed.
    bool grid_defaulted = false;

    double c() const;  // 1 - e^{-b}

    /// Fills M and M_t for an input of the given support spread. The grid
    /// default is max(8192, 128 (spread + 1)) rounded up to a power of two;
    /// measurements put the truncated-coefficient mass near 1e-5 at a 32x
    /// grid and around 1e-7 at 128x, with unlucky draws within a small
    /// factor of 1e-6 (hence the doubling retry).
    MPSParams resolved(std::int64_t spread) const;

    void validate() const;
};

/// Measured properties of a constructed damped factor. A construction is
/// accepted only if every field is within tolerance; nothing is assumed
/// beyond what was evaluated on the grid.
struct MPSCertificate {
    double b = 0.0;
    double c = 0.0;
    std::size_t M = 0;
    std::size_t M_t = 0;
    double tol = 0.0;
    double eps_support = 0.0;          // l2 mass of dropped (aliased/truncated) coefficients
    double max_prop3_violation = 0.0;  // max over grid of |R_hat + 1| - 1
    double l2_ratio = 0.0;             // ||R||_2 / (sqrt(2) b ||f||_2)
    double min_real_h = 0.0;           // min over grid of Re h_hat - |f_hat|
    double sup_R = 0.0;                // max over grid of |R_hat|
    bool accepted = false;

    std::string to_json() const;
};

/// The analytic completion h and damped factor R of an input f, together
/// with the measured certificate.
struct MPSFactor {
    SupportedFunction h;
    SupportedFunction R;
    MPSCertificate diagnostics;
};

/// One summand of the iterated construction.
struct TestFunctionStep {
    SupportedFunction g;
    SupportedFunction D;  // empty for the first step
    MPSFactor factor;     // factor of g, present from the second step on
};

struct IteratedTestFunction {
    SupportedFunction R;
    std::vector<TestFunctionStep> per_step;
    MPSParams params;
    double sup_R = 0.0;        // max over grid of |R_hat|
    double residual_l2 = 0.0;  // || R - (c sum g_j + sum D_j) ||_2
    bool accepted = false;
};

/// h supported on Z_{<=0} whose transform has real part equal to |f_hat|
/// on the grid, built from the cosine coefficients of |f_hat|:
/// h(0) = c_0, h(n) = 2 c_n for -M_t <= n < 0.
/// Requires f real, nonzero, spread(f) < M/4.
SupportedFunction analytic_completion(const SupportedFunction& f, const MPSParams& params);

/// R with R_hat = e^{-b h_hat} - 1 evaluated on the grid, inverse
/// transformed and truncated to [-M_t, 0]. Throws construction_error
/// (carrying the certificate) if any measured property exceeds tol.
MPSFactor damped_factor(const SupportedFunction& f, const MPSParams& params);

/// h = g + c f + g * R_f. Requires sup |g_hat|, sup |f_hat| <= 1 + tol on
/// the grid; the result then keeps sup |h_hat| <= 1 within accumulated
/// tolerance.
SupportedFunction combine_step(const SupportedFunction& g, const SupportedFunction& f,
                               const MPSFactor& factor, const MPSParams& params);

/// Runs the recursion R_1 = c g_1, R_{i+1} = R_i + c g_{i+1} + R_i * R_{g_{i+1}}
/// and certifies sup |R_hat| and the decomposition residual.
IteratedTestFunction build_test_function(std::span<const SupportedFunction> gs,
                                         const MPSParams& params);

/// F_ij with F_ij_hat = R_{g_j}_hat * prod_{i < l < j} (R_{g_l}_hat + 1),
/// reconstructed from the stored per-step factors (1 <= i < j <= J).
/// Satisfies ||F_ij||_2 <= sqrt(2) b ||g_j||_2 and D_j = c sum_{i<j} g_i * F_ij.
SupportedFunction extract_factors(const IteratedTestFunction& itf, std::size_t i, std::size_t j);

struct TestFunctionBound {
    double bound = 0.0;
    IteratedTestFunction itf;
};

/// Certified lower bound for || 1_A hat ||_1: builds mu_j = 1_{A_j}/|A_j|
/// over the chain's segments, runs the iterated construction, and returns
/// Re <R, 1_A> normalised by max(1, measured sup |R_hat|).
TestFunctionBound lower_bound_report(const setcore::IntegerSet& A,
                                     const bounds::SegmentChain& segments,
                                     const MPSParams& params);

double lower_bound_via_test_function(const setcore::IntegerSet& A,
                                     const bounds::SegmentChain& segments,
                                     const MPSParams& params);

}  // namespace littlewood::mps
