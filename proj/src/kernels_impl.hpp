#pragma once

// Loop skeletons shared by the kernel variants. Each variant instantiates
// these with its own innermost span operation, so the traversal (and with
// it the per-entry addition order) is identical across variants.

#include "covest/kernels.hpp"

namespace covest::detail {

template <typename AddSpan>
inline void accumulate_row_impl(const RowShifts& s, const Complex* products, Complex* scratch,
                                AddSpan&& add_span) {
    const std::size_t last_q = s.cols - s.window_width + 1;
    for (std::size_t j = 0; j < s.row_len; ++j) {
        const std::size_t c1 = j + 1;
        const std::size_t c2 = c1 + s.dc;
        const std::size_t q_lo = c2 > s.window_width ? c2 - s.window_width + 1 : 1;
        const std::size_t q_hi = c1 < last_q ? c1 : last_q;
        const Complex val = products[j];
        // Window column q puts the first element at c_rel = c1 - q + 1;
        // start from q_hi, the smallest c_rel.
        Complex* dst = scratch + s.slot_base + s.column_stride * (c1 - q_hi);
        const std::size_t runs = q_hi - q_lo + 1;
        if (s.span == s.column_stride) {
            // Runs touch end to end.
            add_span(dst, val, runs * s.span);
            continue;
        }
        for (std::size_t k = runs; k > 0; --k, dst += s.column_stride)
            add_span(dst, val, s.span);
    }
}

} // namespace covest::detail
