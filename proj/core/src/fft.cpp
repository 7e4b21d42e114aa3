#include "littlewood/fft.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace littlewood::spectral {

namespace {

// Twiddle tables per transform size, shared across calls. Precomputing
// them dominates the first call and makes repeated same-size transforms
// (the common case in quadrature loops) cheap.
struct Plan {
    std::vector<std::uint32_t> bitrev;
    std::vector<cplx> twiddle;  // e^{-2 pi i j / M} for j < M/2
};

const Plan& plan_for(std::size_t m) {
    static std::mutex mu;
    static std::unordered_map<std::size_t, std::unique_ptr<Plan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;

    auto plan = std::make_unique<Plan>();
    const int logm = static_cast<int>(std::countr_zero(m));
    plan->bitrev.resize(m);
    for (std::size_t i = 1; i < m; ++i) {
        plan->bitrev[i] = (plan->bitrev[i >> 1] >> 1) |
                          static_cast<std::uint32_t>((i & 1) << (logm - 1));
    }
    plan->twiddle.resize(m / 2);
    for (std::size_t j = 0; j < m / 2; ++j) {
        const double ang = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
        plan->twiddle[j] = {std::cos(ang), std::sin(ang)};
    }
    const Plan& ref = *plan;
    cache.emplace(m, std::move(plan));
    return ref;
}

// Manual complex product; avoids the library's NaN-propagating __muldc3.
inline cplx cmul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

void fft_inplace(std::vector<cplx>& data, bool inverse) {
    const std::size_t m = data.size();
    if (m <= 1) return;
    if (!is_pow2(m)) throw std::invalid_argument("fft_inplace: size must be a power of two");

    const Plan& plan = plan_for(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = plan.bitrev[i];
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= m; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = m / len;
        for (std::size_t start = 0; start < m; start += len) {
            std::size_t tw = 0;
            for (std::size_t k = 0; k < half; ++k, tw += step) {
                cplx w = plan.twiddle[tw];
                if (inverse) w = std::conj(w);
                const cplx u = data[start + k];
                const cplx t = cmul(w, data[start + k + half]);
                data[start + k] = u + t;
                data[start + k + half] = u - t;
            }
        }
    }

    if (inverse) {
        const double inv = 1.0 / static_cast<double>(m);
        for (auto& v : data) v *= inv;
    }
}

}  // namespace littlewood::spectral
