#pragma once

// Reference covariance-method estimator: slide the window, column-stack it,
// add the rank-1 Hermitian product. It is the oracle every other path is
// checked against, so it stays deliberately plain and single-threaded.

#include <cstdint>
#include <vector>

#include "covest/core.hpp"

namespace covest {

/// Upper-left corner (p, q) of a window placement, 1-based.
struct WindowPosition {
    std::size_t p = 1;
    std::size_t q = 1;
    friend bool operator==(const WindowPosition&, const WindowPosition&) = default;
};

/// Every in-bounds placement, 1 <= p <= N-P+1 and 1 <= q <= M-Q+1, row-major.
std::vector<WindowPosition> window_positions(std::size_t rows, std::size_t cols, const WindowSpec& w);

/// Column stack of the window at pos: v[P*(j-1) + i - 1] = A(p+i-1, q+j-1).
std::vector<Complex> column_stack(const InputMatrix& a, const WindowSpec& w, WindowPosition pos);

/// C = sum over all placements of V * V^H, upper triangle only.
CovarianceMatrix estimate_naive(const InputMatrix& a, const WindowSpec& w);

/// Same sum, visiting the placements in the given order.
CovarianceMatrix estimate_naive(const InputMatrix& a, const WindowSpec& w,
                                const std::vector<WindowPosition>& order);

struct NaiveOpCount {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
};

/// Closed-form operation counts of the naive method,
/// SM = SA = (N-P)(M-Q) P^2 Q^2. Note the (N-P)(M-Q) placement factor is
/// the published analysis count, not the (N-P+1)(M-Q+1) placements the
/// estimator actually visits. Throws CapacityError on 64-bit overflow.
NaiveOpCount count_naive_ops(std::size_t rows, std::size_t cols, const WindowSpec& w);

} // namespace covest
