#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "littlewood/integer_set.hpp"

namespace littlewood::spectral {

using cplx = std::complex<double>;

/// A finitely supported function Z -> C in canonical form: entries sorted
/// by index, exact zeros dropped. Immutable value type.
class SupportedFunction {
public:
    SupportedFunction() = default;

    static SupportedFunction from_entries(std::vector<std::pair<std::int64_t, cplx>> entries);
    /// Linear-time construction from strictly increasing indices.
    static SupportedFunction from_sorted_entries(std::vector<std::int64_t> support,
                                                 std::vector<cplx> values);
    static SupportedFunction delta(std::int64_t n, cplx value = 1.0);
    static SupportedFunction indicator(const setcore::IntegerSet& A);
    /// mu_A = (1/|A|) 1_A; requires A nonempty.
    static SupportedFunction normalized_indicator(const setcore::IntegerSet& A);

    bool empty() const noexcept { return support_.empty(); }
    std::size_t term_count() const noexcept { return support_.size(); }

    std::int64_t support_min() const;
    std::int64_t support_max() const;
    std::int64_t spread() const;  // support_max - support_min, 0 if <= 1 term

    cplx at(std::int64_t n) const;

    std::span<const std::int64_t> support() const noexcept { return support_; }
    std::span<const cplx> values() const noexcept { return values_; }

    bool is_real(double tol = 0.0) const;

    SupportedFunction plus(const SupportedFunction& g) const;
    SupportedFunction scaled(cplx c) const;

    double l1() const;     // sum |f(n)|
    double l2_sq() const;  // sum |f(n)|^2
    double l2() const;

private:
    std::vector<std::int64_t> support_;
    std::vector<cplx> values_;
};

/// Exact time-domain convolution, O(#f * #g) accumulation over the output
/// range. Output spread above 2^26 is rejected.
SupportedFunction convolve(const SupportedFunction& f, const SupportedFunction& g);

/// Transform-based convolution for wide dense operands; bit-for-bit it is
/// floating point, not exact, with relative error at roundoff level.
SupportedFunction convolve_fft(const SupportedFunction& f, const SupportedFunction& g);

/// g°(x) = conj(g(-x)); its transform is the conjugate of g's.
SupportedFunction reflect_conjugate(const SupportedFunction& g);

/// <f, g> = sum_n f(n) conj(g(n)).
cplx inner_product(const SupportedFunction& f, const SupportedFunction& g);

}  // namespace littlewood::spectral
