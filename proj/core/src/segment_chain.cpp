#include "littlewood/segment_chain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "littlewood/energy.hpp"

namespace littlewood::bounds {

namespace {

// Energies of the nested segments, one thread per stripe. Each segment's
// omega is independent of the others.
std::vector<double> segment_omegas(const setcore::IntegerSet& A,
                                   const std::vector<std::size_t>& sizes) {
    std::vector<double> omegas(sizes.size(), 0.0);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, sizes.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            omegas[i] = setcore::additive_energy(setcore::initial_segment(A, sizes[i])).omega;
        }
        return omegas;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < sizes.size(); i += workers) {
                omegas[i] = setcore::additive_energy(setcore::initial_segment(A, sizes[i])).omega;
            }
        });
    }
    for (auto& t : pool) t.join();
    return omegas;
}

}  // namespace

SegmentChain::SegmentChain(setcore::IntegerSet base, std::vector<std::size_t> sizes,
                           std::vector<double> omegas, ChainScheme scheme, double lambda_or_eta,
                           double delta)
    : base_(std::move(base)),
      sizes_(std::move(sizes)),
      omegas_(std::move(omegas)),
      scheme_(scheme),
      lambda_or_eta_(lambda_or_eta),
      delta_(delta) {}

double SegmentChain::lambda() const {
    if (scheme_ != ChainScheme::lambda_geometric) {
        throw std::domain_error("SegmentChain: lambda requested from an eta_inverse chain");
    }
    return lambda_or_eta_;
}

double SegmentChain::eta() const {
    if (scheme_ != ChainScheme::eta_inverse) {
        throw std::domain_error("SegmentChain: eta requested from a lambda_geometric chain");
    }
    return lambda_or_eta_;
}

double SegmentChain::delta() const {
    if (scheme_ != ChainScheme::eta_inverse) {
        throw std::domain_error("SegmentChain: delta requested from a lambda_geometric chain");
    }
    return delta_;
}

setcore::IntegerSet SegmentChain::segment(std::size_t j) const {
    if (j < 1 || j > sizes_.size()) {
        throw std::domain_error("SegmentChain::segment: index out of range");
    }
    return setcore::initial_segment(base_, sizes_[j - 1]);
}

double SegmentChain::j_lower_ratio() const {
    if (scheme_ != ChainScheme::lambda_geometric) {
        throw std::domain_error("SegmentChain: j_lower_ratio is defined for geometric chains");
    }
    const double n = static_cast<double>(base_.size());
    return static_cast<double>(J()) / (std::log(n) / std::log(lambda_or_eta_));
}

SegmentChain build_chain_lambda(const setcore::IntegerSet& A, double lambda) {
    if (!(lambda > 1.0)) throw std::domain_error("build_chain_lambda: lambda must be > 1");
    const std::size_t n = A.size();
    if (n < 3) {
        throw std::domain_error("build_chain_lambda: need |A| >= 3 so floor(log N) >= 1");
    }
    const auto seed = static_cast<std::size_t>(std::floor(std::log(static_cast<double>(n))));
    std::vector<std::size_t> sizes = {seed};
    while (true) {
        const double next = std::ceil(lambda * static_cast<double>(sizes.back()));
        if (next > static_cast<double>(n)) break;
        sizes.push_back(static_cast<std::size_t>(next));
    }
    auto omegas = segment_omegas(A, sizes);
    return SegmentChain(A, std::move(sizes), std::move(omegas), ChainScheme::lambda_geometric,
                        lambda, 0.0);
}

SegmentChain build_chain_eta(const setcore::IntegerSet& A, double delta, double eta) {
    if (!(delta > 0.0 && delta <= 0.5)) {
        throw std::domain_error("build_chain_eta: delta must lie in (0, 1/2]");
    }
    if (!(eta > 0.0 && eta <= 0.25)) {
        throw std::domain_error("build_chain_eta: eta must lie in (0, 1/4]");
    }
    const std::size_t n = A.size();
    // Snap nearly-integral powers before flooring, so e.g. 16^0.5 seeds 4.
    const double p = std::pow(static_cast<double>(n), 1.0 - delta);
    const auto seed = static_cast<std::size_t>(std::floor(p + 1e-9));
    if (seed < 1) throw std::domain_error("build_chain_eta: floor(N^(1-delta)) must be >= 1");
    if (seed > n) throw std::domain_error("build_chain_eta: seed exceeds |A|");

    const double growth = 1.0 / (1.0 - eta);
    std::vector<std::size_t> sizes = {seed};
    while (true) {
        const double next = std::ceil(growth * static_cast<double>(sizes.back()));
        if (next > static_cast<double>(n)) break;
        sizes.push_back(static_cast<std::size_t>(next));
    }
    auto omegas = segment_omegas(A, sizes);
    return SegmentChain(A, std::move(sizes), std::move(omegas), ChainScheme::eta_inverse, eta,
                        delta);
}

}  // namespace littlewood::bounds
