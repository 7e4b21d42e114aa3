#include "littlewood/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "littlewood/errors.hpp"

namespace littlewood::bounds {

namespace {

// Kahan-compensated accumulator; chains can reach J ~ 10^3 terms.
struct StableSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double omega_root_sum(const std::vector<double>& omegas) {
    StableSum s;
    for (const double w : omegas) s.add(std::sqrt(w));
    return s.sum;
}

}  // namespace

BoundReport prop31_bound(const SegmentChain& chain, double b) {
    if (!(b > 0.0)) throw std::domain_error("prop31_bound: b must be positive");
    const double lambda = chain.lambda();  // rejects eta chains
    BoundReport r;
    r.J = chain.J();
    r.b = b;
    r.lambda_or_eta = lambda;
    r.omega_sum = omega_root_sum(chain.omegas());
    r.formula = BoundFormula::prop31;
    const double factor = b * std::sqrt(2.0) / (std::sqrt(lambda) - 1.0);
    r.bound_value = (1.0 - std::exp(-b)) * (static_cast<double>(r.J) - factor * r.omega_sum);
    return r;
}

BoundReport cor51_bound(const SegmentChain& chain, double c_abs) {
    if (!(c_abs > 0.0)) throw std::domain_error("cor51_bound: c_abs must be positive");
    const double eta = chain.eta();  // rejects lambda chains
    BoundReport r;
    r.J = chain.J();
    r.b = 1.0;
    r.lambda_or_eta = eta;
    r.omega_sum = omega_root_sum(chain.omegas());
    r.formula = BoundFormula::cor51;
    r.gg_constant = 1.0 - std::exp(-1.0);
    r.bound_value = static_cast<double>(r.J) - c_abs / eta * r.omega_sum;
    return r;
}

setcore::Energy gabriel_bound(std::size_t n, std::size_t m) {
    if (m < 1 || n < 1) throw std::domain_error("gabriel_bound: sizes must be positive");
    if (m > n) throw std::domain_error("gabriel_bound: need m <= n");
    // n m^2 - (m^3 - m)/3; the second term is integral since 3 | m^3 - m.
    const auto nn = static_cast<setcore::Energy>(n);
    const auto mm = static_cast<setcore::Energy>(m);
    return nn * mm * mm - (mm * mm * mm - mm) / 3;
}

bool ordering_bound_check(const setcore::IntegerSet& A, const setcore::IntegerSet& B) {
    const std::size_t n = A.size(), m = B.size();
    if (n == 0 || m == 0) throw std::domain_error("ordering_bound_check: empty set");
    if (m > n) throw std::domain_error("ordering_bound_check: need |B| <= |A|");
    if (n > 200) {
        throw capacity_error("ordering_bound_check: sizes above 200 are rejected");
    }
    const auto profile = setcore::RepresentationProfile::of_sum(A, B);
    // Rank convention (validated against exhaustive counts): i ranks A
    // ascending (1..n), j ranks B ascending (1..m), and
    //   r(a_i + b_j) <= 1 + min(n - i, j - 1) + min(i - 1, m - j).
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const std::int64_t r = profile.count(A[i - 1] + B[j - 1]);
            const auto cap = static_cast<std::int64_t>(
                1 + std::min(n - i, j - 1) + std::min(i - 1, m - j));
            if (r > cap) return false;
        }
    }
    return true;
}

StructureResult find_structured_subset(const setcore::IntegerSet& A, double K, double delta,
                                       double c_eta) {
    if (!(K > 0.0)) throw std::domain_error("find_structured_subset: K must be positive");
    if (!(delta > 0.0 && delta <= 0.5)) {
        throw std::domain_error("find_structured_subset: delta must lie in (0, 1/2]");
    }
    if (!(c_eta > 0.0 && c_eta <= 0.25)) {
        throw std::domain_error("find_structured_subset: c_eta must lie in (0, 1/4]");
    }
    const std::size_t n = A.size();
    if (n < 16) throw std::domain_error("find_structured_subset: need N >= 16");

    StructureResult res;
    res.delta = delta;
    res.K = K;
    double eta = c_eta * delta / K;
    if (eta > 0.25) {
        eta = 0.25;
        res.eta_clamped = true;
    }
    res.eta_used = eta;

    const double logn = std::log(static_cast<double>(n));
    const bool trivial_ratio = delta / K <= 1.0 / std::sqrt(static_cast<double>(n));
    const bool trivial_delta = delta <= 1.0 / logn;
    if (trivial_ratio || trivial_delta) {
        res.A_prime = A;
        res.omega = setcore::additive_energy(A).omega;
        res.all_omegas = {res.omega};
        res.segment_index = 0;
        res.reason = trivial_ratio ? StructureReason::trivial_delta_over_k
                                   : StructureReason::trivial_small_delta;
        return res;
    }

    const SegmentChain chain = build_chain_eta(A, delta, eta);
    if (chain.J() == 0) throw std::domain_error("find_structured_subset: degenerate chain");
    res.all_omegas = chain.omegas();
    const auto it = std::max_element(res.all_omegas.begin(), res.all_omegas.end());
    const auto idx = static_cast<std::size_t>(it - res.all_omegas.begin());
    res.omega = *it;
    res.segment_index = idx + 1;
    res.A_prime = chain.segment(idx + 1);
    res.reason = StructureReason::chain;
    return res;
}

}  // namespace littlewood::bounds
