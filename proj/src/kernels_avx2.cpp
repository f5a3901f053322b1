#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_common.hpp"
#include "qadv/kernels.hpp"

namespace qadv::kern {

namespace {

// two complex doubles per __m256d, interleaved (re, im, re, im)

// (a * c) for per-lane complex constant vectors CR = (cr, cr, cr', cr'),
// CI = (ci, ci, ci', ci'); matches the scalar product/addition order.
inline __m256d cmul_vec(__m256d a, __m256d cr, __m256d ci) {
    __m256d t1 = _mm256_mul_pd(a, cr);
    __m256d t2 = _mm256_mul_pd(_mm256_permute_pd(a, 0x5), ci);
    return _mm256_addsub_pd(t1, t2);
}

inline void cmul_scalar(double ar, double ai, double br, double bi, double& rr, double& ri) {
    rr = ar * br - ai * bi;
    ri = ar * bi + ai * br;
}

void v_unitary2(cd* amp, std::uint64_t size, int t, const cd* m, std::uint64_t cmask, std::uint64_t cval) {
    const std::uint64_t tbit = std::uint64_t(1) << t;
    double* d = reinterpret_cast<double*>(amp);
    const double m00r = m[0].real(), m00i = m[0].imag(), m01r = m[1].real(), m01i = m[1].imag();
    const double m10r = m[2].real(), m10i = m[2].imag(), m11r = m[3].real(), m11i = m[3].imag();

    if (t == 0) {
        // adjacent pairs: one vector holds (lo, hi)
        const __m256d cAr = _mm256_set_pd(m10r, m10r, m00r, m00r);
        const __m256d cAi = _mm256_set_pd(m10i, m10i, m00i, m00i);
        const __m256d cBr = _mm256_set_pd(m11r, m11r, m01r, m01r);
        const __m256d cBi = _mm256_set_pd(m11i, m11i, m01i, m01i);
        for_each_run(size, cmask | tbit, cval, [&](std::uint64_t start, std::uint64_t) {
            __m256d v = _mm256_loadu_pd(d + 2 * start);
            __m256d lo = _mm256_permute2f128_pd(v, v, 0x00);
            __m256d hi = _mm256_permute2f128_pd(v, v, 0x11);
            __m256d out = _mm256_add_pd(cmul_vec(lo, cAr, cAi), cmul_vec(hi, cBr, cBi));
            _mm256_storeu_pd(d + 2 * start, out);
        });
        return;
    }

    const __m256d v00r = _mm256_set1_pd(m00r), v00i = _mm256_set1_pd(m00i);
    const __m256d v01r = _mm256_set1_pd(m01r), v01i = _mm256_set1_pd(m01i);
    const __m256d v10r = _mm256_set1_pd(m10r), v10i = _mm256_set1_pd(m10i);
    const __m256d v11r = _mm256_set1_pd(m11r), v11i = _mm256_set1_pd(m11i);
    for_each_run(size, cmask | tbit, cval, [&](std::uint64_t start, std::uint64_t len) {
        std::uint64_t i = start;
        for (; i + 2 <= start + len; i += 2) {
            double* plo = d + 2 * i;
            double* phi = d + 2 * (i | tbit);
            __m256d a = _mm256_loadu_pd(plo);
            __m256d b = _mm256_loadu_pd(phi);
            __m256d na = _mm256_add_pd(cmul_vec(a, v00r, v00i), cmul_vec(b, v01r, v01i));
            __m256d nb = _mm256_add_pd(cmul_vec(a, v10r, v10i), cmul_vec(b, v11r, v11i));
            _mm256_storeu_pd(plo, na);
            _mm256_storeu_pd(phi, nb);
        }
        for (; i < start + len; ++i) {
            const std::uint64_t lo = 2 * i, hi = 2 * (i | tbit);
            const double ar = d[lo], ai = d[lo + 1], br = d[hi], bi = d[hi + 1];
            double t0r, t0i, t1r, t1i;
            cmul_scalar(m00r, m00i, ar, ai, t0r, t0i);
            cmul_scalar(m01r, m01i, br, bi, t1r, t1i);
            d[lo] = t0r + t1r;
            d[lo + 1] = t0i + t1i;
            cmul_scalar(m10r, m10i, ar, ai, t0r, t0i);
            cmul_scalar(m11r, m11i, br, bi, t1r, t1i);
            d[hi] = t0r + t1r;
            d[hi + 1] = t0i + t1i;
        }
    });
}

void v_diag2(cd* amp, std::uint64_t size, int t, cd d0, cd d1, std::uint64_t cmask, std::uint64_t cval) {
    const std::uint64_t tbit = std::uint64_t(1) << t;
    double* d = reinterpret_cast<double*>(amp);
    const double d0r = d0.real(), d0i = d0.imag(), d1r = d1.real(), d1i = d1.imag();
    const bool skip0 = (d0r == 1.0 && d0i == 0.0);

    if (t == 0) {
        const __m256d cr = _mm256_set_pd(d1r, d1r, d0r, d0r);
        const __m256d ci = _mm256_set_pd(d1i, d1i, d0i, d0i);
        for_each_run(size, cmask | tbit, cval, [&](std::uint64_t start, std::uint64_t) {
            __m256d v = _mm256_loadu_pd(d + 2 * start);
            _mm256_storeu_pd(d + 2 * start, cmul_vec(v, cr, ci));
        });
        return;
    }

    const __m256d v0r = _mm256_set1_pd(d0r), v0i = _mm256_set1_pd(d0i);
    const __m256d v1r = _mm256_set1_pd(d1r), v1i = _mm256_set1_pd(d1i);
    for_each_run(size, cmask | tbit, cval, [&](std::uint64_t start, std::uint64_t len) {
        if (!skip0) {
            std::uint64_t i = start;
            for (; i + 2 <= start + len; i += 2) {
                double* p = d + 2 * i;
                _mm256_storeu_pd(p, cmul_vec(_mm256_loadu_pd(p), v0r, v0i));
            }
            for (; i < start + len; ++i) {
                const double ar = d[2 * i], ai = d[2 * i + 1];
                cmul_scalar(ar, ai, d0r, d0i, d[2 * i], d[2 * i + 1]);
            }
        }
        std::uint64_t i = start;
        for (; i + 2 <= start + len; i += 2) {
            double* p = d + 2 * (i | tbit);
            _mm256_storeu_pd(p, cmul_vec(_mm256_loadu_pd(p), v1r, v1i));
        }
        for (; i < start + len; ++i) {
            const std::uint64_t hi = 2 * (i | tbit);
            const double ar = d[hi], ai = d[hi + 1];
            cmul_scalar(ar, ai, d1r, d1i, d[hi], d[hi + 1]);
        }
    });
}

void v_flip(cd* amp, std::uint64_t size, int t, std::uint64_t cmask, std::uint64_t cval) {
    const std::uint64_t tbit = std::uint64_t(1) << t;
    double* d = reinterpret_cast<double*>(amp);
    if (t == 0) {
        for_each_run(size, cmask | tbit, cval, [&](std::uint64_t start, std::uint64_t) {
            __m256d v = _mm256_loadu_pd(d + 2 * start);
            _mm256_storeu_pd(d + 2 * start, _mm256_permute2f128_pd(v, v, 0x01));
        });
        return;
    }
    for_each_run(size, cmask | tbit, cval, [&](std::uint64_t start, std::uint64_t len) {
        std::uint64_t i = start;
        for (; i + 2 <= start + len; i += 2) {
            double* plo = d + 2 * i;
            double* phi = d + 2 * (i | tbit);
            __m256d a = _mm256_loadu_pd(plo);
            __m256d b = _mm256_loadu_pd(phi);
            _mm256_storeu_pd(plo, b);
            _mm256_storeu_pd(phi, a);
        }
        for (; i < start + len; ++i) std::swap(amp[i], amp[i | tbit]);
    });
}

void v_scale(cd* amp, std::uint64_t size, cd factor, std::uint64_t cmask, std::uint64_t cval) {
    double* d = reinterpret_cast<double*>(amp);
    const double fr = factor.real(), fi = factor.imag();
    const __m256d vr = _mm256_set1_pd(fr), vi = _mm256_set1_pd(fi);
    for_each_run(size, cmask, cval, [&](std::uint64_t start, std::uint64_t len) {
        std::uint64_t i = start;
        for (; i + 2 <= start + len; i += 2) {
            double* p = d + 2 * i;
            _mm256_storeu_pd(p, cmul_vec(_mm256_loadu_pd(p), vr, vi));
        }
        for (; i < start + len; ++i) {
            const double ar = d[2 * i], ai = d[2 * i + 1];
            cmul_scalar(ar, ai, fr, fi, d[2 * i], d[2 * i + 1]);
        }
    });
}

}  // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops{v_unitary2, v_diag2, v_flip, v_scale, "avx2"};
    return &ops;
}

}  // namespace qadv::kern

#else

#include "qadv/kernels.hpp"

namespace qadv::kern {
const Ops* avx2_ops_impl() { return nullptr; }
}  // namespace qadv::kern

#endif
