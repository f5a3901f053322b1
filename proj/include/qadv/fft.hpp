#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qadv {

using cd = std::complex<double>;

// In-place radix-2 FFT with the +i sign convention:
//   out[j] = sum_k in[k] * exp(+2*pi*i*j*k/N)
// No 1/sqrt(N) factor; callers scale as needed.  N must be a power of two.
inline void fft_plus(std::vector<cd>& a) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * 3.14159265358979323846 / double(len);
        const cd wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cd u = a[i + k];
                cd v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Inverse of fft_plus (the -i convention), including the 1/N factor.
inline void fft_minus_scaled(std::vector<cd>& a) {
    for (auto& v : a) v = std::conj(v);
    fft_plus(a);
    const double inv = 1.0 / double(a.size());
    for (auto& v : a) v = std::conj(v) * inv;
}

// Fourier coefficients a_k (k stored mod N) of samples on a uniform periodic grid:
// samples[j] = sum_k a_k exp(+2*pi*i*j*k/N).
inline std::vector<cd> fourier_coefficients(std::span<const cd> samples) {
    std::vector<cd> a(samples.begin(), samples.end());
    fft_minus_scaled(a);
    return a;
}

// Reconstruct grid samples from coefficients stored mod N.
inline std::vector<cd> fourier_synthesis(std::span<const cd> coeff) {
    std::vector<cd> a(coeff.begin(), coeff.end());
    fft_plus(a);
    return a;
}

}  // namespace qadv
