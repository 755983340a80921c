#include "hs/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hs/util.hpp"

namespace hs {

TrigSeries TrigSeries::truncated(int n) const {
    TrigSeries out(n);
    int m = std::min(n, degree);
    for (int k = -m; k <= m; ++k) out.at(k) = at(k);
    return out;
}

bool TrigSeries::conjugate_symmetric(double tol) const {
    for (int k = 0; k <= degree; ++k)
        if (std::abs(at(-k) - std::conj(at(k))) > tol) return false;
    return true;
}

void TrigSeries::symmetrize() {
    at(0) = cd(at(0).real(), 0.0);
    for (int k = 1; k <= degree; ++k) {
        cd avg = 0.5 * (at(k) + std::conj(at(-k)));
        at(k) = avg;
        at(-k) = std::conj(avg);
    }
}

cd TrigSeries::synthesize(double theta) const {
    cd w = std::polar(1.0, theta);
    // Horner over e^{i theta} for k >= 0 and e^{-i theta} for k < 0.
    cd pos(0.0);
    for (int k = degree; k >= 0; --k) pos = pos * w + at(k);
    cd wb = std::conj(w);
    cd neg(0.0);
    for (int k = degree; k >= 1; --k) neg = neg * wb + at(-k);
    return pos + neg * wb;
}

void fft_inplace(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        cd wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

TrigSeries fourier_from_samples(std::span<const cd> samples) {
    const std::size_t m = samples.size();
    if (!is_pow2(m) || m < 256)
        throw std::invalid_argument("fourier_from_samples: sample count must be a power of two >= 256");
    std::vector<cd> a(samples.begin(), samples.end());
    for (const cd& v : a)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("fourier_from_samples: non-finite sample");
    fft_inplace(a, false);
    const int half = static_cast<int>(m) / 2;
    TrigSeries out(half - 1);
    const double scale = 1.0 / static_cast<double>(m);
    for (int k = -(half - 1); k <= half - 1; ++k) {
        std::size_t idx = static_cast<std::size_t>(k >= 0 ? k : k + static_cast<int>(m));
        out.at(k) = a[idx] * scale;
    }
    return out;
}

}  // namespace hs
