#pragma once

#include <span>
#include <vector>

#include "hs/disk.hpp"

namespace hs {

/// Truncated Fourier series on the circle: coefficients c_k for |k| <= degree,
/// stored centered (c[k + degree]).
struct TrigSeries {
    int degree = 0;
    std::vector<cd> c;

    TrigSeries() : c(1, cd(0.0)) {}
    explicit TrigSeries(int n) : degree(n), c(2 * n + 1, cd(0.0)) {}

    cd at(int k) const { return c[static_cast<std::size_t>(k + degree)]; }
    cd& at(int k) { return c[static_cast<std::size_t>(k + degree)]; }

    /// Copy truncated (or zero-padded) to degree n.
    TrigSeries truncated(int n) const;
    /// True when c_{-k} = conj(c_k) for every k, within tol.
    bool conjugate_symmetric(double tol = 1e-12) const;
    /// Force exact symmetry by averaging the two halves.
    void symmetrize();
    /// sum_k c_k e^{i k theta}.
    cd synthesize(double theta) const;
};

/// In-place radix-2 FFT; size must be a power of two.
void fft_inplace(std::vector<cd>& a, bool inverse);

/// DFT of M uniform samples F(2 pi j / M) -> coefficients c_k, |k| <= M/2 - 1.
/// M must be a power of two >= 256. Finite values required.
TrigSeries fourier_from_samples(std::span<const cd> samples);

}  // namespace hs
