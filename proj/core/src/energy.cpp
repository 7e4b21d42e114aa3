#include "littlewood/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "littlewood/fft.hpp"

namespace littlewood::setcore {

namespace {

// Sum ranges wider than this fall back to hashed counting.
constexpr std::int64_t kDenseWidthCap = std::int64_t{1} << 26;

// Dense counting switches to the transform-based path once the pair count
// makes the quadratic loop noticeably slow. The transform result is only
// trusted after it snaps to integers and reproduces |A||B| exactly;
// otherwise we fall back to direct counting.
constexpr unsigned long long kFftPairCutover = 1ull << 26;
constexpr std::int64_t kFftWidthCap = std::int64_t{1} << 24;

void count_direct(const IntegerSet& A, const IntegerSet& B,
                  std::vector<std::uint32_t>& counts, std::int64_t offset) {
    for (const std::int64_t a : A) {
        const std::int64_t base = a - offset;
        for (const std::int64_t b : B) {
            ++counts[static_cast<std::size_t>(base + b)];
        }
    }
}

bool count_via_transform(const IntegerSet& A, const IntegerSet& B,
                         std::vector<std::uint32_t>& counts) {
    using spectral::cplx;
    const std::size_t m = spectral::next_pow2(counts.size());

    std::vector<cplx> fa(m, cplx{0.0, 0.0});
    for (const std::int64_t a : A) fa[static_cast<std::size_t>(a - A.min())] += 1.0;
    spectral::fft_inplace(fa, false);

    const bool same = A.elements().data() == B.elements().data() ||
                      std::equal(A.begin(), A.end(), B.begin(), B.end());
    if (same) {
        for (auto& v : fa) {
            v = {v.real() * v.real() - v.imag() * v.imag(), 2.0 * v.real() * v.imag()};
        }
    } else {
        std::vector<cplx> fb(m, cplx{0.0, 0.0});
        for (const std::int64_t b : B) fb[static_cast<std::size_t>(b - B.min())] += 1.0;
        spectral::fft_inplace(fb, false);
        for (std::size_t k = 0; k < m; ++k) {
            const cplx x = fa[k], y = fb[k];
            fa[k] = {x.real() * y.real() - x.imag() * y.imag(),
                     x.real() * y.imag() + x.imag() * y.real()};
        }
    }
    spectral::fft_inplace(fa, true);

    // counts[i] corresponds to sum value offset + i = (A.min + B.min) + i.
    Energy total = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double re = fa[i].real();
        const double snapped = std::nearbyint(re);
        if (std::abs(re - snapped) > 0.125 || std::abs(fa[i].imag()) > 0.125 || snapped < 0.0) {
            return false;
        }
        counts[i] = static_cast<std::uint32_t>(snapped);
        total += static_cast<std::uint64_t>(counts[i]);
    }
    return total == static_cast<Energy>(A.size()) * static_cast<Energy>(B.size());
}

}  // namespace

std::string energy_to_string(Energy e) {
    if (e == 0) return "0";
    std::string out;
    while (e > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(e % 10)));
        e /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::uint64_t energy_to_u64(Energy e) {
    if (e > static_cast<Energy>(UINT64_MAX)) {
        throw std::overflow_error("energy_to_u64: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(e);
}

RepresentationProfile RepresentationProfile::of_sum(const IntegerSet& A, const IntegerSet& B) {
    if (A.empty() || B.empty()) {
        throw std::domain_error("RepresentationProfile: both sets must be nonempty");
    }
    RepresentationProfile p;
    const std::int64_t lo = A.min() + B.min();
    const std::int64_t hi = A.max() + B.max();
    const std::int64_t width = hi - lo + 1;

    if (width <= kDenseWidthCap) {
        p.dense_ = true;
        p.offset_ = lo;
        p.dense_counts_.assign(static_cast<std::size_t>(width), 0);
        const auto pairs = static_cast<unsigned long long>(A.size()) * B.size();
        bool done = false;
        if (pairs > kFftPairCutover && width <= kFftWidthCap) {
            done = count_via_transform(A, B, p.dense_counts_);
            if (!done) std::fill(p.dense_counts_.begin(), p.dense_counts_.end(), 0u);
        }
        if (!done) count_direct(A, B, p.dense_counts_, lo);
    } else {
        const auto pairs = static_cast<unsigned long long>(A.size()) * B.size();
        p.sparse_counts_.reserve(static_cast<std::size_t>(
            std::min<unsigned long long>(pairs / 2 + 1, 1ull << 22)));
        for (const std::int64_t a : A) {
            for (const std::int64_t b : B) {
                ++p.sparse_counts_[a + b];
            }
        }
    }
    return p;
}

std::int64_t RepresentationProfile::count(std::int64_t sum_value) const {
    if (dense_) {
        const std::int64_t idx = sum_value - offset_;
        if (idx < 0 || idx >= static_cast<std::int64_t>(dense_counts_.size())) return 0;
        return dense_counts_[static_cast<std::size_t>(idx)];
    }
    auto it = sparse_counts_.find(sum_value);
    return it == sparse_counts_.end() ? 0 : it->second;
}

Energy RepresentationProfile::total_pairs() const {
    Energy t = 0;
    if (dense_) {
        for (const auto c : dense_counts_) t += c;
    } else {
        for (const auto& [_, c] : sparse_counts_) t += c;
    }
    return t;
}

Energy RepresentationProfile::sum_of_squares() const {
    Energy t = 0;
    if (dense_) {
        for (const auto c : dense_counts_) {
            t += static_cast<std::uint64_t>(c) * c;
        }
    } else {
        for (const auto& [_, c] : sparse_counts_) {
            t += static_cast<std::uint64_t>(c) * c;
        }
    }
    return t;
}

std::vector<std::int64_t> RepresentationProfile::support() const {
    std::vector<std::int64_t> out;
    if (dense_) {
        for (std::size_t i = 0; i < dense_counts_.size(); ++i) {
            if (dense_counts_[i] != 0) out.push_back(offset_ + static_cast<std::int64_t>(i));
        }
    } else {
        out.reserve(sparse_counts_.size());
        for (const auto& [x, _] : sparse_counts_) out.push_back(x);
        std::sort(out.begin(), out.end());
    }
    return out;
}

EnergyReport additive_energy(const IntegerSet& B) {
    if (B.empty()) throw std::domain_error("additive_energy: empty set");
    const auto profile = RepresentationProfile::of_sum(B, B);
    EnergyReport r;
    r.energy = profile.sum_of_squares();
    r.size = B.size();
    const long double n = static_cast<long double>(B.size());
    r.omega = static_cast<double>(static_cast<long double>(r.energy) / (n * n * n));
    return r;
}

Energy cross_energy(const IntegerSet& A, const IntegerSet& B) {
    if (A.empty() || B.empty()) throw std::domain_error("cross_energy: empty set");
    return RepresentationProfile::of_sum(A, B).sum_of_squares();
}

}  // namespace littlewood::setcore
