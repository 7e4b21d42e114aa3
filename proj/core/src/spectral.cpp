#include "littlewood/spectral.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "littlewood/errors.hpp"
#include "littlewood/fft.hpp"

namespace littlewood::spectral {

double SpectralGrid::l1() const {
    long double s = 0.0L;
    for (const auto& v : values) s += std::abs(v);
    return static_cast<double>(s / static_cast<long double>(M));
}

double SpectralGrid::l2_sq() const {
    long double s = 0.0L;
    for (const auto& v : values) s += v.real() * v.real() + v.imag() * v.imag();
    return static_cast<double>(s / static_cast<long double>(M));
}

double SpectralGrid::l4_4() const {
    long double s = 0.0L;
    for (const auto& v : values) {
        const long double a2 = v.real() * v.real() + v.imag() * v.imag();
        s += a2 * a2;
    }
    return static_cast<double>(s / static_cast<long double>(M));
}

double SpectralGrid::linf() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

SpectralGrid sample_transform(const SupportedFunction& f, std::size_t M) {
    if (!is_pow2(M)) throw std::domain_error("transform: grid size must be a power of two");
    SpectralGrid g;
    g.M = M;
    g.values.assign(M, cplx{0.0, 0.0});
    if (f.empty()) return g;
    g.source_support_min = f.support_min();
    g.source_support_max = f.support_max();
    const auto sup = f.support();
    const auto val = f.values();
    const auto m64 = static_cast<std::int64_t>(M);
    for (std::size_t i = 0; i < sup.size(); ++i) {
        std::int64_t r = sup[i] % m64;
        if (r < 0) r += m64;
        g.values[static_cast<std::size_t>(r)] += val[i];
    }
    fft_inplace(g.values, false);
    return g;
}

SpectralGrid transform(const SupportedFunction& f, std::size_t M) {
    const std::size_t required = f.empty() ? 2 : 2 * (static_cast<std::size_t>(f.spread()) + 1);
    if (!is_pow2(M) || M < required) {
        throw std::domain_error("transform: grid size " + std::to_string(M) +
                                " aliases; need a power of two >= " +
                                std::to_string(next_pow2(required)));
    }
    return sample_transform(f, M);
}

NormReport l1_norm(const SupportedFunction& f, double rel_tol) {
    if (f.empty()) throw std::domain_error("l1_norm: zero function");
    if (rel_tol < 1e-10) throw std::domain_error("l1_norm: rel_tol must be >= 1e-10");

    const auto spread = static_cast<std::size_t>(f.spread());
    std::size_t M = next_pow2(std::max<std::size_t>(4096, 16 * (spread + 1)));

    double prev_l1 = -1.0, prev_l4 = -1.0;
    NormReport report;
    while (true) {
        const SpectralGrid g = sample_transform(f, M);
        const double l1 = g.l1();
        const double l4 = std::pow(g.l4_4(), 0.25);
        if (prev_l1 >= 0.0) {
            const double d1 = std::abs(l1 - prev_l1) / l1;
            const double d4 = l4 > 0.0 ? std::abs(l4 - prev_l4) / l4 : 0.0;
            if (d1 < rel_tol && d4 < rel_tol) {
                report.l1 = l1;
                report.l2 = std::sqrt(g.l2_sq());
                report.l4 = l4;
                report.linf = g.linf();
                report.grid_used = M;
                report.certified_rel_error = std::max(d1, d4);
                return report;
            }
        }
        prev_l1 = l1;
        prev_l4 = l4;
        if (M >= kQuadratureGridCap) {
            throw accuracy_error("l1_norm: no convergence to rel_tol " +
                                     std::to_string(rel_tol) + " by grid 2^26; best estimate " +
                                     std::to_string(prev_l1),
                                 prev_l1);
        }
        M *= 2;
    }
}

std::pair<double, setcore::Energy> l4_energy_check(const setcore::IntegerSet& A) {
    if (A.empty()) throw std::domain_error("l4_energy_check: empty set");
    const std::int64_t spread = A.spread();
    if (spread >= (std::int64_t{1} << 24)) {
        throw capacity_error("l4_energy_check: spread " + std::to_string(spread) +
                             " exceeds 2^24");
    }
    // |1_A hat|^4 is a trigonometric polynomial of degree 2 * spread, so any
    // grid with M > 4 * spread sums it exactly.
    const std::size_t M = next_pow2(static_cast<std::size_t>(4 * spread + 1));
    const auto f = SupportedFunction::indicator(A);
    const SpectralGrid g = sample_transform(f, std::max<std::size_t>(M, 8));
    const double e_spectral = g.l4_4();
    const auto e_exact = setcore::additive_energy(A).energy;
    return {e_spectral, e_exact};
}

void write_spectrum_csv(std::ostream& out, const SpectralGrid& grid) {
    out << "theta,abs,re,im\n";
    for (std::size_t k = 0; k < grid.M; ++k) {
        const double theta = static_cast<double>(k) / static_cast<double>(grid.M);
        const cplx v = grid.values[k];
        out << theta << ',' << std::abs(v) << ',' << v.real() << ',' << v.imag() << '\n';
    }
}

}  // namespace littlewood::spectral
