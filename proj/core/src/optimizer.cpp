#include "littlewood/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "littlewood/bounds.hpp"
#include "littlewood/errors.hpp"
#include "littlewood/generators.hpp"

namespace littlewood::optimizer {

double objective(double b, double lambda) {
    if (!(b > 0.0)) throw std::domain_error("objective: b must be positive");
    if (!(lambda > 1.0)) throw std::domain_error("objective: lambda must be > 1");
    return (1.0 - std::exp(-b)) / std::log(lambda) *
           (1.0 - 2.0 * b / (std::sqrt(3.0) * (std::sqrt(lambda) - 1.0)));
}

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

template <typename F>
double golden_max(F f, double lo, double hi, double tol) {
    if (hi - lo <= tol) return 0.5 * (lo + hi);
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

OptimumReport maximize(const Box& box, double tol) {
    if (tol < 1e-10) throw std::domain_error("maximize: tol must be >= 1e-10");
    if (!(box.b_lo > 0.0) || box.b_lo > box.b_hi) {
        throw std::domain_error("maximize: empty or invalid b range");
    }
    if (!(box.lambda_lo > 1.0) || box.lambda_lo > box.lambda_hi) {
        throw std::domain_error("maximize: empty or invalid lambda range");
    }

    OptimumReport rep;
    double b = 0.5 * (box.b_lo + box.b_hi);
    double lambda = 0.5 * (box.lambda_lo + box.lambda_hi);
    const bool b_pinned = box.b_hi - box.b_lo <= tol;
    const bool lambda_pinned = box.lambda_hi - box.lambda_lo <= tol;

    // Comparison-based section search cannot localise a smooth maximum
    // below ~sqrt(eps) * scale, so the sweeps also stop once the objective
    // is stationary to machine precision across consecutive sweeps.
    constexpr std::size_t kMaxSweeps = 5000;
    bool converged = b_pinned && lambda_pinned;
    double prev_f = objective(b, lambda);
    int stationary_sweeps = 0;
    for (std::size_t sweep = 0; !converged && sweep < kMaxSweeps; ++sweep) {
        const double nb =
            b_pinned ? b : golden_max([&](double x) { return objective(x, lambda); },
                                      box.b_lo, box.b_hi, tol);
        const double nl =
            lambda_pinned ? lambda : golden_max([&](double x) { return objective(nb, x); },
                                                box.lambda_lo, box.lambda_hi, tol);
        const double move = std::max(std::abs(nb - b), std::abs(nl - lambda));
        b = nb;
        lambda = nl;
        rep.iterations = sweep + 1;
        rep.convergence_radius = move;
        const double f = objective(b, lambda);
        if (std::abs(f - prev_f) <= 4.0 * 2.220446049250313e-16 * std::abs(f)) {
            ++stationary_sweeps;
        } else {
            stationary_sweeps = 0;
        }
        prev_f = f;
        if (move < tol || stationary_sweeps >= 3) converged = true;
    }
    if (!converged) {
        throw optimization_error("maximize: coordinate sweeps did not reach a fixed point "
                                 "(last move " + std::to_string(rep.convergence_radius) + ")");
    }

    rep.b_star = b;
    rep.lambda_star = lambda;
    rep.f_star = objective(b, lambda);

    constexpr double kProbe = 1e-4;
    rep.b_on_boundary = (b - box.b_lo < kProbe) || (box.b_hi - b < kProbe);
    rep.lambda_on_boundary = (lambda - box.lambda_lo < kProbe) || (box.lambda_hi - lambda < kProbe);

    // Local-max certificate over the in-box axis perturbations. Golden
    // section brackets to ~tol, so an improvement here means the sweeps
    // stalled on a ridge rather than a maximum.
    const double plateau = 1e-12 * std::max(1.0, std::abs(rep.f_star));
    auto probe = [&](double pb, double pl) {
        if (pb < box.b_lo || pb > box.b_hi || pl < box.lambda_lo || pl > box.lambda_hi) return;
        const double v = objective(pb, pl);
        if (v > rep.f_star + plateau) {
            throw optimization_error(
                "maximize: certificate failed; f(" + std::to_string(pb) + ", " +
                std::to_string(pl) + ") = " + std::to_string(v) + " beats f_star = " +
                std::to_string(rep.f_star));
        }
    };
    probe(b - kProbe, lambda);
    probe(b + kProbe, lambda);
    probe(b, lambda - kProbe);
    probe(b, lambda + kProbe);
    return rep;
}

std::vector<PipelineRow> constant_pipeline(const std::vector<std::size_t>& N_values) {
    for (const auto n : N_values) {
        if (n < 16) throw std::domain_error("constant_pipeline: each N must be >= 16");
    }
    const OptimumReport opt = maximize(default_box());
    std::vector<PipelineRow> rows;
    rows.reserve(N_values.size());
    for (const auto n : N_values) {
        setcore::GenParams gp;
        gp.length = n;
        const auto A = setcore::generate(setcore::GenKind::interval, gp, 0);
        const auto chain = bounds::build_chain_lambda(A, opt.lambda_star);
        const auto report = bounds::prop31_bound(chain, opt.b_star);
        PipelineRow row;
        row.N = n;
        row.J = report.J;
        row.bound = report.bound_value;
        row.ratio = report.bound_value / std::log(static_cast<double>(n));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace littlewood::optimizer
