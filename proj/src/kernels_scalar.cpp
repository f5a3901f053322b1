#include "kernels_common.hpp"
#include "qadv/kernels.hpp"

namespace qadv::kern {

namespace {

// complex arithmetic written out so the SIMD variants can match it bitwise
inline void cmul(double ar, double ai, double br, double bi, double& rr, double& ri) {
    rr = ar * br - ai * bi;
    ri = ar * bi + ai * br;
}

void s_unitary2(cd* amp, std::uint64_t size, int t, const cd* m, std::uint64_t cmask, std::uint64_t cval) {
    const std::uint64_t tbit = std::uint64_t(1) << t;
    double* d = reinterpret_cast<double*>(amp);
    const double m00r = m[0].real(), m00i = m[0].imag(), m01r = m[1].real(), m01i = m[1].imag();
    const double m10r = m[2].real(), m10i = m[2].imag(), m11r = m[3].real(), m11i = m[3].imag();
    for_each_run(size, cmask | tbit, cval, [&](std::uint64_t start, std::uint64_t len) {
        for (std::uint64_t i = start; i < start + len; ++i) {
            const std::uint64_t lo = 2 * i, hi = 2 * (i | tbit);
            const double ar = d[lo], ai = d[lo + 1], br = d[hi], bi = d[hi + 1];
            double t0r, t0i, t1r, t1i;
            cmul(m00r, m00i, ar, ai, t0r, t0i);
            cmul(m01r, m01i, br, bi, t1r, t1i);
            d[lo] = t0r + t1r;
            d[lo + 1] = t0i + t1i;
            cmul(m10r, m10i, ar, ai, t0r, t0i);
            cmul(m11r, m11i, br, bi, t1r, t1i);
            d[hi] = t0r + t1r;
            d[hi + 1] = t0i + t1i;
        }
    });
}

void s_diag2(cd* amp, std::uint64_t size, int t, cd d0, cd d1, std::uint64_t cmask, std::uint64_t cval) {
    const std::uint64_t tbit = std::uint64_t(1) << t;
    double* d = reinterpret_cast<double*>(amp);
    const double d0r = d0.real(), d0i = d0.imag(), d1r = d1.real(), d1i = d1.imag();
    const bool skip0 = (d0r == 1.0 && d0i == 0.0);
    for_each_run(size, cmask | tbit, cval, [&](std::uint64_t start, std::uint64_t len) {
        if (!skip0) {
            for (std::uint64_t i = start; i < start + len; ++i) {
                const std::uint64_t lo = 2 * i;
                const double ar = d[lo], ai = d[lo + 1];
                cmul(ar, ai, d0r, d0i, d[lo], d[lo + 1]);
            }
        }
        for (std::uint64_t i = start; i < start + len; ++i) {
            const std::uint64_t hi = 2 * (i | tbit);
            const double ar = d[hi], ai = d[hi + 1];
            cmul(ar, ai, d1r, d1i, d[hi], d[hi + 1]);
        }
    });
}

void s_flip(cd* amp, std::uint64_t size, int t, std::uint64_t cmask, std::uint64_t cval) {
    const std::uint64_t tbit = std::uint64_t(1) << t;
    for_each_run(size, cmask | tbit, cval, [&](std::uint64_t start, std::uint64_t len) {
        for (std::uint64_t i = start; i < start + len; ++i) {
            cd tmp = amp[i];
            amp[i] = amp[i | tbit];
            amp[i | tbit] = tmp;
        }
    });
}

void s_scale(cd* amp, std::uint64_t size, cd factor, std::uint64_t cmask, std::uint64_t cval) {
    double* d = reinterpret_cast<double*>(amp);
    const double fr = factor.real(), fi = factor.imag();
    for_each_run(size, cmask, cval, [&](std::uint64_t start, std::uint64_t len) {
        for (std::uint64_t i = start; i < start + len; ++i) {
            const double ar = d[2 * i], ai = d[2 * i + 1];
            cmul(ar, ai, fr, fi, d[2 * i], d[2 * i + 1]);
        }
    });
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{s_unitary2, s_diag2, s_flip, s_scale, "scalar"};
    return ops;
}

}  // namespace qadv::kern
