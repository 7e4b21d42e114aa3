#include "littlewood/supported_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "littlewood/errors.hpp"
#include "littlewood/fft.hpp"

namespace littlewood::spectral {

namespace {
constexpr std::int64_t kConvSpreadCap = std::int64_t{1} << 26;
}

SupportedFunction SupportedFunction::from_entries(
    std::vector<std::pair<std::int64_t, cplx>> entries) {
    std::map<std::int64_t, cplx> acc;
    for (const auto& [n, v] : entries) acc[n] += v;
    SupportedFunction f;
    f.support_.reserve(acc.size());
    f.values_.reserve(acc.size());
    for (const auto& [n, v] : acc) {
        if (v != cplx{0.0, 0.0}) {
            f.support_.push_back(n);
            f.values_.push_back(v);
        }
    }
    return f;
}

SupportedFunction SupportedFunction::from_sorted_entries(std::vector<std::int64_t> support,
                                                         std::vector<cplx> values) {
    if (support.size() != values.size()) {
        throw std::invalid_argument("from_sorted_entries: length mismatch");
    }
    SupportedFunction f;
    f.support_.reserve(support.size());
    f.values_.reserve(values.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i > 0 && support[i] <= support[i - 1]) {
            throw std::invalid_argument("from_sorted_entries: indices must be strictly increasing");
        }
        if (values[i] != cplx{0.0, 0.0}) {
            f.support_.push_back(support[i]);
            f.values_.push_back(values[i]);
        }
    }
    return f;
}

SupportedFunction SupportedFunction::delta(std::int64_t n, cplx value) {
    return from_entries({{n, value}});
}

SupportedFunction SupportedFunction::indicator(const setcore::IntegerSet& A) {
    SupportedFunction f;
    f.support_.assign(A.begin(), A.end());
    f.values_.assign(A.size(), cplx{1.0, 0.0});
    return f;
}

SupportedFunction SupportedFunction::normalized_indicator(const setcore::IntegerSet& A) {
    if (A.empty()) throw std::domain_error("normalized_indicator: empty set");
    SupportedFunction f;
    f.support_.assign(A.begin(), A.end());
    f.values_.assign(A.size(), cplx{1.0 / static_cast<double>(A.size()), 0.0});
    return f;
}

std::int64_t SupportedFunction::support_min() const {
    if (empty()) throw std::domain_error("SupportedFunction: empty support");
    return support_.front();
}

std::int64_t SupportedFunction::support_max() const {
    if (empty()) throw std::domain_error("SupportedFunction: empty support");
    return support_.back();
}

std::int64_t SupportedFunction::spread() const {
    if (support_.size() < 2) return 0;
    return support_.back() - support_.front();
}

cplx SupportedFunction::at(std::int64_t n) const {
    const auto it = std::lower_bound(support_.begin(), support_.end(), n);
    if (it == support_.end() || *it != n) return {0.0, 0.0};
    return values_[static_cast<std::size_t>(it - support_.begin())];
}

bool SupportedFunction::is_real(double tol) const {
    for (const auto& v : values_) {
        if (std::abs(v.imag()) > tol) return false;
    }
    return true;
}

SupportedFunction SupportedFunction::plus(const SupportedFunction& g) const {
    SupportedFunction out;
    out.support_.reserve(support_.size() + g.support_.size());
    out.values_.reserve(support_.size() + g.support_.size());
    std::size_t i = 0, j = 0;
    auto push = [&out](std::int64_t n, cplx v) {
        if (v != cplx{0.0, 0.0}) {
            out.support_.push_back(n);
            out.values_.push_back(v);
        }
    };
    while (i < support_.size() && j < g.support_.size()) {
        if (support_[i] < g.support_[j]) {
            push(support_[i], values_[i]);
            ++i;
        } else if (support_[i] > g.support_[j]) {
            push(g.support_[j], g.values_[j]);
            ++j;
        } else {
            push(support_[i], values_[i] + g.values_[j]);
            ++i;
            ++j;
        }
    }
    for (; i < support_.size(); ++i) push(support_[i], values_[i]);
    for (; j < g.support_.size(); ++j) push(g.support_[j], g.values_[j]);
    return out;
}

SupportedFunction SupportedFunction::scaled(cplx c) const {
    if (c == cplx{0.0, 0.0}) return {};
    SupportedFunction out = *this;
    for (auto& v : out.values_) {
        v = {v.real() * c.real() - v.imag() * c.imag(),
             v.real() * c.imag() + v.imag() * c.real()};
    }
    return out;
}

double SupportedFunction::l1() const {
    double s = 0.0;
    for (const auto& v : values_) s += std::abs(v);
    return s;
}

double SupportedFunction::l2_sq() const {
    double s = 0.0;
    for (const auto& v : values_) s += v.real() * v.real() + v.imag() * v.imag();
    return s;
}

double SupportedFunction::l2() const { return std::sqrt(l2_sq()); }

SupportedFunction convolve(const SupportedFunction& f, const SupportedFunction& g) {
    if (f.empty() || g.empty()) return {};
    const std::int64_t lo = f.support_min() + g.support_min();
    const std::int64_t hi = f.support_max() + g.support_max();
    if (hi - lo > kConvSpreadCap) {
        throw capacity_error("convolve: output spread " + std::to_string(hi - lo) +
                             " exceeds 2^26");
    }
    std::vector<cplx> dense(static_cast<std::size_t>(hi - lo + 1), cplx{0.0, 0.0});
    const auto fs = f.support(), gs = g.support();
    const auto fv = f.values(), gv = g.values();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const cplx a = fv[i];
        const std::int64_t base = fs[i] - lo;
        for (std::size_t j = 0; j < gs.size(); ++j) {
            const cplx b = gv[j];
            dense[static_cast<std::size_t>(base + gs[j])] +=
                cplx{a.real() * b.real() - a.imag() * b.imag(),
                     a.real() * b.imag() + a.imag() * b.real()};
        }
    }
    std::vector<std::int64_t> support;
    std::vector<cplx> values;
    support.reserve(dense.size());
    values.reserve(dense.size());
    for (std::size_t k = 0; k < dense.size(); ++k) {
        support.push_back(lo + static_cast<std::int64_t>(k));
        values.push_back(dense[k]);
    }
    return SupportedFunction::from_sorted_entries(std::move(support), std::move(values));
}

SupportedFunction convolve_fft(const SupportedFunction& f, const SupportedFunction& g) {
    if (f.empty() || g.empty()) return {};
    const std::int64_t lo = f.support_min() + g.support_min();
    const std::int64_t hi = f.support_max() + g.support_max();
    if (hi - lo > kConvSpreadCap) {
        throw capacity_error("convolve_fft: output spread " + std::to_string(hi - lo) +
                             " exceeds 2^26");
    }
    const std::size_t m = next_pow2(static_cast<std::size_t>(hi - lo + 1));
    std::vector<cplx> fa(m, cplx{0.0, 0.0}), fb(m, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < f.support().size(); ++i) {
        fa[static_cast<std::size_t>(f.support()[i] - f.support_min())] += f.values()[i];
    }
    for (std::size_t j = 0; j < g.support().size(); ++j) {
        fb[static_cast<std::size_t>(g.support()[j] - g.support_min())] += g.values()[j];
    }
    fft_inplace(fa, false);
    fft_inplace(fb, false);
    for (std::size_t k = 0; k < m; ++k) {
        const cplx x = fa[k], y = fb[k];
        fa[k] = {x.real() * y.real() - x.imag() * y.imag(),
                 x.real() * y.imag() + x.imag() * y.real()};
    }
    fft_inplace(fa, true);

    std::vector<std::int64_t> support;
    std::vector<cplx> values;
    support.reserve(static_cast<std::size_t>(hi - lo + 1));
    values.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) {
        support.push_back(n);
        values.push_back(fa[static_cast<std::size_t>(n - lo)]);
    }
    return SupportedFunction::from_sorted_entries(std::move(support), std::move(values));
}

SupportedFunction reflect_conjugate(const SupportedFunction& g) {
    std::vector<std::pair<std::int64_t, cplx>> entries;
    entries.reserve(g.term_count());
    for (std::size_t i = 0; i < g.support().size(); ++i) {
        entries.emplace_back(-g.support()[i], std::conj(g.values()[i]));
    }
    return SupportedFunction::from_entries(std::move(entries));
}

cplx inner_product(const SupportedFunction& f, const SupportedFunction& g) {
    cplx s{0.0, 0.0};
    std::size_t i = 0, j = 0;
    const auto fs = f.support(), gs = g.support();
    while (i < fs.size() && j < gs.size()) {
        if (fs[i] < gs[j]) ++i;
        else if (fs[i] > gs[j]) ++j;
        else {
            s += f.values()[i] * std::conj(g.values()[j]);
            ++i;
            ++j;
        }
    }
    return s;
}

}  // namespace littlewood::spectral
