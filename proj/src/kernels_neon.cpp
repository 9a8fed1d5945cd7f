#include "covest/kernels.hpp"

#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace covest::detail {

// One float64x2_t holds exactly one Complex.

void conj_product_neon(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
    const float64x2_t flip = {1.0, -1.0};
    for (std::size_t k = 0; k < n; ++k) {
        const float64x2_t xv = vld1q_f64(&x[k].re);             // xr xi
        const float64x2_t yv = vld1q_f64(&y[k].re);             // yr yi
        const float64x2_t a = vmulq_laneq_f64(xv, yv, 0);       // xr*yr  xi*yr
        const float64x2_t xsw = vextq_f64(xv, xv, 1);           // xi xr
        const float64x2_t b = vmulq_laneq_f64(xsw, yv, 1);      // xi*yi  xr*yi
        vst1q_f64(&out[k].re, vaddq_f64(a, vmulq_f64(b, flip)));
    }
}

void accumulate_row_neon(const RowShifts& shifts, const Complex* products, Complex* scratch) {
    accumulate_row_impl(shifts, products, scratch, [](Complex* dst, Complex v, std::size_t n) {
        const float64x2_t vv = {v.re, v.im};
        for (std::size_t k = 0; k < n; ++k)
            vst1q_f64(&dst[k].re, vaddq_f64(vld1q_f64(&dst[k].re), vv));
    });
}

} // namespace covest::detail
