#include "covest/kernels.hpp"

#include "kernels_impl.hpp"

namespace covest::detail {

void conj_product_scalar(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        out[k] = mul_conj(x[k], y[k]);
}

void accumulate_row_scalar(const RowShifts& shifts, const Complex* products, Complex* scratch) {
    accumulate_row_impl(shifts, products, scratch, [](Complex* dst, Complex v, std::size_t n) {
        for (std::size_t k = 0; k < n; ++k)
            dst[k] += v;
    });
}

} // namespace covest::detail
