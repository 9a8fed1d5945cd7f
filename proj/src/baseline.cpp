#include "covest/baseline.hpp"

#include "checked.hpp"

namespace covest {

std::vector<WindowPosition> window_positions(std::size_t rows, std::size_t cols, const WindowSpec& w) {
    w.validate_for(rows, cols);
    std::vector<WindowPosition> out;
    out.reserve((rows - w.height + 1) * (cols - w.width + 1));
    for (std::size_t p = 1; p + w.height - 1 <= rows; ++p)
        for (std::size_t q = 1; q + w.width - 1 <= cols; ++q)
            out.push_back({p, q});
    return out;
}

std::vector<Complex> column_stack(const InputMatrix& a, const WindowSpec& w, WindowPosition pos) {
    std::vector<Complex> v(w.stack_length());
    for (std::size_t j = 1; j <= w.width; ++j)
        for (std::size_t i = 1; i <= w.height; ++i)
            v[column_stack_index(i, j, w) - 1] = a(pos.p + i - 1, pos.q + j - 1);
    return v;
}

CovarianceMatrix estimate_naive(const InputMatrix& a, const WindowSpec& w) {
    return estimate_naive(a, w, window_positions(a.rows(), a.cols(), w));
}

CovarianceMatrix estimate_naive(const InputMatrix& a, const WindowSpec& w,
                                const std::vector<WindowPosition>& order) {
    w.validate_for(a.rows(), a.cols());
    const std::size_t dim = w.stack_length();
    CovarianceMatrix c(dim);
    auto packed = c.packed();
    for (const auto& pos : order) {
        const auto v = column_stack(a, w, pos);
        std::size_t k = 0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j, ++k)
                packed[k] += mul_conj(v[i], v[j]);
    }
    return c;
}

NaiveOpCount count_naive_ops(std::size_t rows, std::size_t cols, const WindowSpec& w) {
    w.validate_for(rows, cols);
    const std::uint64_t pq = detail::checked_mul(w.height, w.width);
    const std::uint64_t sm = detail::checked_mul(
        detail::checked_mul(rows - w.height, cols - w.width), detail::checked_mul(pq, pq));
    return {sm, sm};
}

} // namespace covest
