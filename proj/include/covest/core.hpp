#pragma once

// Domain types shared by every computation path.
//
// Index conventions: all logical indices are 1-based. Input element A(r, c)
// has r in [1, rows], c in [1, cols]. Output indices (row, col) lie in
// [1, P*Q]. Storage underneath is 0-based; conversion happens only in the
// accessors below.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "covest/errors.hpp"

namespace covest {

struct Complex {
    double re = 0.0;
    double im = 0.0;

    constexpr Complex() = default;
    constexpr Complex(double r, double i = 0.0) : re(r), im(i) {}

    constexpr Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    constexpr double norm2() const { return re * re + im * im; }

    friend constexpr Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend constexpr Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr bool operator==(const Complex&, const Complex&) = default;
};

static_assert(sizeof(Complex) == 2 * sizeof(double), "Complex must alias double[2]");

constexpr Complex conj(const Complex& z) { return {z.re, -z.im}; }

/// a * conj(b). The single product every covariance entry is made of; all
/// computation paths and kernel variants evaluate it with exactly these
/// operations so their results can be compared bitwise.
constexpr Complex mul_conj(const Complex& a, const Complex& b) {
    return {a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
}

/// Sliding window dimensions: height P, width Q.
struct WindowSpec {
    std::size_t height = 1;
    std::size_t width = 1;

    /// Throws InvalidWindow unless 1 <= P <= rows and 1 <= Q <= cols.
    void validate_for(std::size_t rows, std::size_t cols) const;

    /// P*Q, the length of a column-stacked window and the output side length.
    /// Throws CapacityError on overflow.
    std::size_t stack_length() const;

    friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

/// Dense N x M complex input, row-major. Immutable after construction.
class InputMatrix {
public:
    InputMatrix(std::size_t rows, std::size_t cols);
    InputMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

    /// Builds from f(r, c) evaluated for 1-based r, c.
    static InputMatrix generate(std::size_t rows, std::size_t cols,
                                const std::function<Complex(std::size_t, std::size_t)>& f);

    /// Entries with re, im independently uniform in [-1, 1), drawn from
    /// std::mt19937_64(seed) in row-major order, re before im. Each draw x maps
    /// to 2 * (x >> 11) * 2^-53 - 1, so the matrix is bit-reproducible.
    static InputMatrix random(std::size_t rows, std::size_t cols, std::uint64_t seed);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Checked 1-based access.
    Complex operator()(std::size_t r, std::size_t c) const;

    /// Row r (1-based), unchecked.
    std::span<const Complex> row(std::size_t r) const {
        return {data_.data() + (r - 1) * cols_, cols_};
    }

    std::span<const Complex> data() const { return data_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

/// Vector index of window element (r_rel, c_rel) in the column stack:
/// P * (c_rel - 1) + r_rel. Throws IndexError outside the window.
std::size_t column_stack_index(std::size_t r_rel, std::size_t c_rel, const WindowSpec& w);

inline std::size_t packed_offset_unchecked(std::size_t r, std::size_t c, std::size_t dim) {
    return (r - 1) * dim - (r - 1) * (r - 2) / 2 + (c - r);
}

/// Offset of upper-triangle element (r, c), r <= c, in row-major packed
/// storage. Throws IndexError for r > c or indices outside [1, dim].
std::size_t packed_offset(std::size_t r, std::size_t c, std::size_t dim);

/// The PQ x PQ Hermitian output, upper triangle (with diagonal) packed
/// row-major. Concurrent writers must touch disjoint entries; there is no
/// internal locking.
class CovarianceMatrix {
public:
    explicit CovarianceMatrix(std::size_t dim);

    /// dim * (dim + 1) / 2, throwing CapacityError when unrepresentable.
    static std::size_t packed_size(std::size_t dim);

    std::size_t dim() const { return dim_; }

    std::span<Complex> packed() { return packed_; }
    std::span<const Complex> packed() const { return packed_; }

    /// Mutable upper-triangle entry; r <= c required.
    Complex& upper(std::size_t r, std::size_t c) { return packed_[packed_offset(r, c, dim_)]; }

    /// Any entry; lower-triangle reads return the conjugate of the mirror.
    Complex operator()(std::size_t r, std::size_t c) const;

    /// Row-major dim x dim reconstruction.
    std::vector<Complex> dense() const;

    friend bool operator==(const CovarianceMatrix&, const CovarianceMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Complex> packed_;
};

/// ||a - b||_F / ||b||_F over equally sized arrays; 0 when both are zero,
/// infinity when only b is zero.
double relative_frobenius_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Largest |a_i - b_i| divided by the largest |b_j|.
double max_relative_entry_difference(std::span<const Complex> a, std::span<const Complex> b);

} // namespace covest
