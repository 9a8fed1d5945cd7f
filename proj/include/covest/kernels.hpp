#pragma once

// Inner-loop kernels of the combination engine.
//
// Each kernel has a scalar reference implementation and, where the target
// supports it, a SIMD variant (AVX2 on x86-64, NEON on AArch64). Variants
// perform the same IEEE operations in the same per-element order as the
// scalar code, so every variant produces bitwise-identical results; the
// test suite checks this. The best supported set is picked at runtime,
// and COVEST_KERNELS=scalar in the environment forces the reference path.

#include <cstddef>
#include <vector>

#include "covest/core.hpp"

namespace covest {

enum class KernelIsa { Scalar, Avx2, Neon };

/// Geometry of one row of pair products (all pairs sharing the first
/// element's row) within a combination's scratch array. Product j belongs
/// to the pair whose first element sits in column j + 1; it is added to a
/// run of `span` consecutive slots for every window column q that contains
/// both elements.
struct RowShifts {
    std::size_t row_len = 0;        // products in the row, M - dc
    std::size_t dc = 0;             // column distance of the combination
    std::size_t window_width = 1;   // Q
    std::size_t cols = 1;           // M
    std::size_t slot_base = 0;      // slot of the first run at c_rel = 1
    std::size_t column_stride = 1;  // slots per c_rel step
    std::size_t span = 0;           // window rows containing the pair
};

struct KernelSet {
    KernelIsa isa;
    const char* name;

    /// out[k] = x[k] * conj(y[k]) for k < n. out may not alias x or y.
    void (*conj_product)(const Complex* x, const Complex* y, Complex* out, std::size_t n);

    /// For each product j of a pair row and each window column q holding
    /// the pair: scratch[base_q + k] += products[j] for k < span. Products
    /// are applied in increasing j.
    void (*accumulate_row)(const RowShifts& shifts, const Complex* products, Complex* scratch);
};

const KernelSet& scalar_kernels();

/// Every kernel set compiled in and supported by this CPU, scalar first.
std::vector<const KernelSet*> available_kernels();

/// The set the engine uses by default; chosen once per process.
const KernelSet& active_kernels();

namespace detail {

void conj_product_scalar(const Complex* x, const Complex* y, Complex* out, std::size_t n);
void accumulate_row_scalar(const RowShifts& shifts, const Complex* products, Complex* scratch);

#if defined(COVEST_HAVE_AVX2)
void conj_product_avx2(const Complex* x, const Complex* y, Complex* out, std::size_t n);
void accumulate_row_avx2(const RowShifts& shifts, const Complex* products, Complex* scratch);
#endif

#if defined(COVEST_HAVE_NEON)
void conj_product_neon(const Complex* x, const Complex* y, Complex* out, std::size_t n);
void accumulate_row_neon(const RowShifts& shifts, const Complex* products, Complex* scratch);
#endif

} // namespace detail

} // namespace covest
