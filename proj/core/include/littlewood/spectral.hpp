#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "littlewood/energy.hpp"
#include "littlewood/integer_set.hpp"
#include "littlewood/supported_function.hpp"

namespace littlewood::spectral {

/// M uniform samples of a transform on [0, 1): values[k] = f_hat(k / M).
struct SpectralGrid {
    std::size_t M = 0;
    std::vector<cplx> values;
    std::int64_t source_support_min = 0;
    std::int64_t source_support_max = 0;

    double l1() const;    // (1/M) sum |values|, the periodic trapezoid rule
    double l2_sq() const; // (1/M) sum |values|^2
    double l4_4() const;  // (1/M) sum |values|^4
    double linf() const;  // max |values|
};

/// Alias-free sampling contract: requires M a power of two with
/// M >= 2 (spread + 1), and then values[k] = f_hat(k/M) exactly
/// (up to rounding).
SpectralGrid transform(const SupportedFunction& f, std::size_t M);

/// Pointwise evaluation of f_hat at the M-th roots of unity with no
/// support restriction. The samples are exact evaluations; nothing is
/// claimed about recovering f from them.
SpectralGrid sample_transform(const SupportedFunction& f, std::size_t M);

struct NormReport {
    double l1 = 0.0;
    double l2 = 0.0;
    double l4 = 0.0;
    double linf = 0.0;
    std::size_t grid_used = 0;
    double certified_rel_error = 0.0;  // achieved agreement between the last two grids
};

inline constexpr std::size_t kQuadratureGridCap = std::size_t{1} << 26;

/// Integral norms of f_hat by trapezoid sums on doubling grids, starting at
/// max(4096, 16 (spread + 1)) rounded up to a power of two, stopping when
/// two successive grids agree to rel_tol on both the L1 and L4 values.
NormReport l1_norm(const SupportedFunction& f, double rel_tol = 1e-6);

/// E(A) both ways: the grid quadrature of |1_A hat|^4 (exact for a grid
/// larger than the polynomial degree 4 * spread) and the exact pair count.
std::pair<double, setcore::Energy> l4_energy_check(const setcore::IntegerSet& A);

/// CSV rows "theta,abs,re,im" for external plotting.
void write_spectrum_csv(std::ostream& out, const SpectralGrid& grid);

}  // namespace littlewood::spectral
