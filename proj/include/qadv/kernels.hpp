#pragma once

#include <complex>
#include <cstdint>

namespace qadv::kern {

using cd = std::complex<double>;

// Amplitude-update kernels over a little-endian statevector of `size`
// amplitudes.  Each routine touches only indices i with (i & cmask) == cval;
// cmask never contains the target bit.  The scalar versions are the
// reference; the AVX2 versions must produce bit-identical results.
struct Ops {
    // generic 2x2 unitary m = [m00 m01; m10 m11] on target bit t
    void (*unitary2)(cd* amp, std::uint64_t size, int t, const cd* m, std::uint64_t cmask, std::uint64_t cval);
    // diag(d0, d1) on target bit t
    void (*diag2)(cd* amp, std::uint64_t size, int t, cd d0, cd d1, std::uint64_t cmask, std::uint64_t cval);
    // X on target bit t
    void (*flip)(cd* amp, std::uint64_t size, int t, std::uint64_t cmask, std::uint64_t cval);
    // multiply every selected amplitude by `factor`
    void (*scale)(cd* amp, std::uint64_t size, cd factor, std::uint64_t cmask, std::uint64_t cval);
    const char* name;
};

const Ops& scalar_ops();
const Ops& active_ops();   // runtime-selected (AVX2 when available)
bool avx2_available();
void force_scalar(bool on);  // test hook

}  // namespace qadv::kern
