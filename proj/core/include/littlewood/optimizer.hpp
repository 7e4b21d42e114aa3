#pragma once

#include <cstddef>
#include <vector>

namespace littlewood::optimizer {

/// f(b, lambda) = (1 - e^{-b}) / log(lambda) * (1 - 2b / (sqrt(3)(sqrt(lambda) - 1))).
/// The per-log-N rate the geometric-chain bound achieves on a maximally
/// structured set; its maximum over b > 0, lambda >= 2 is the Littlewood
/// constant this project reproduces.
double objective(double b, double lambda);

struct Box {
    double b_lo = 0.1;
    double b_hi = 5.0;
    double lambda_lo = 2.0;
    double lambda_hi = 500.0;
};

inline Box default_box() { return {}; }

struct OptimumReport {
    double b_star = 0.0;
    double lambda_star = 0.0;
    double f_star = 0.0;
    std::size_t iterations = 0;        // alternating coordinate sweeps
    double convergence_radius = 0.0;   // max coordinate move in the last sweep
    bool b_on_boundary = false;
    bool lambda_on_boundary = false;
};

/// Deterministic alternating golden-section maximisation over the box.
/// The returned point must beat its four in-box axis perturbations at
/// h = 1e-4 (local-max certificate); an in-box improvement throws.
OptimumReport maximize(const Box& box, double tol = 1e-10);

struct PipelineRow {
    std::size_t N = 0;
    std::size_t J = 0;
    double bound = 0.0;
    double ratio = 0.0;  // bound / log N
};

/// For each N: geometric chain at lambda* on {0..N-1}, the chain bound at
/// (b*, lambda*), and its ratio to log N (approaches f* from below as the
/// chain lengthens; saw-toothed in N at small scales because J jumps).
std::vector<PipelineRow> constant_pipeline(const std::vector<std::size_t>& N_values);

}  // namespace littlewood::optimizer
