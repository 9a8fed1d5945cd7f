// Compiled with -mavx2 only; callers reach these through runtime dispatch.

#include "covest/kernels.hpp"

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace covest::detail {

namespace {

// Flips the sign of the imaginary lanes.
inline __m256d negate_imag(__m256d v) {
    const __m256d mask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    return _mm256_xor_pd(v, mask);
}

} // namespace

void conj_product_avx2(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
    const double* xp = &x->re;
    const double* yp = &y->re;
    double* op = &out->re;
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * k);  // xr0 xi0 xr1 xi1
        const __m256d yv = _mm256_loadu_pd(yp + 2 * k);
        const __m256d yre = _mm256_movedup_pd(yv);        // yr yr
        const __m256d yim = _mm256_permute_pd(yv, 0xF);   // yi yi
        const __m256d xsw = _mm256_permute_pd(xv, 0x5);   // xi xr
        const __m256d a = _mm256_mul_pd(xv, yre);         // xr*yr  xi*yr
        const __m256d b = _mm256_mul_pd(xsw, yim);        // xi*yi  xr*yi
        // re = xr*yr + xi*yi, im = xi*yr - xr*yi
        _mm256_storeu_pd(op + 2 * k, _mm256_add_pd(a, negate_imag(b)));
    }
    // Spelled out rather than calling the inline mul_conj: an inline function
    // emitted from this -mavx2 unit could be picked by the linker for callers
    // on CPUs without AVX2.
    for (; k < n; ++k) {
        const double re = x[k].re * y[k].re + x[k].im * y[k].im;
        const double im = x[k].im * y[k].re - x[k].re * y[k].im;
        out[k].re = re;
        out[k].im = im;
    }
}

void accumulate_row_avx2(const RowShifts& shifts, const Complex* products, Complex* scratch) {
    accumulate_row_impl(shifts, products, scratch, [](Complex* dst, Complex v, std::size_t n) {
        double* dp = &dst->re;
        const __m256d vv = _mm256_setr_pd(v.re, v.im, v.re, v.im);
        std::size_t k = 0;
        for (; k + 4 <= n; k += 4) {
            _mm256_storeu_pd(dp + 2 * k, _mm256_add_pd(_mm256_loadu_pd(dp + 2 * k), vv));
            _mm256_storeu_pd(dp + 2 * k + 4, _mm256_add_pd(_mm256_loadu_pd(dp + 2 * k + 4), vv));
        }
        if (k + 2 <= n) {
            _mm256_storeu_pd(dp + 2 * k, _mm256_add_pd(_mm256_loadu_pd(dp + 2 * k), vv));
            k += 2;
        }
        if (k < n)
            _mm_storeu_pd(dp + 2 * k, _mm_add_pd(_mm_loadu_pd(dp + 2 * k), _mm256_castpd256_pd128(vv)));
    });
}

} // namespace covest::detail
