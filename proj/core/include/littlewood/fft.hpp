#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace littlewood::spectral {

using cplx = std::complex<double>;

/// In-place iterative radix-2 transform on a power-of-two buffer.
/// forward: X[k] = sum_n x[n] e^{-2 pi i nk/M}; inverse applies the
/// conjugate kernel and the 1/M factor.
void fft_inplace(std::vector<cplx>& data, bool inverse);

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

bool is_pow2(std::size_t n);

}  // namespace littlewood::spectral
