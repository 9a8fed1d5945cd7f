#include "covest/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace covest {

namespace {

std::string dims(std::size_t a, std::size_t b) {
    return std::to_string(a) + "x" + std::to_string(b);
}

} // namespace

void WindowSpec::validate_for(std::size_t rows, std::size_t cols) const {
    if (height < 1 || width < 1)
        throw InvalidWindow("window " + dims(height, width) + " has a zero dimension");
    if (height > rows || width > cols)
        throw InvalidWindow("window " + dims(height, width) + " does not fit matrix " +
                            dims(rows, cols));
}

std::size_t WindowSpec::stack_length() const {
    std::size_t n = 0;
    if (__builtin_mul_overflow(height, width, &n))
        throw CapacityError("window " + dims(height, width) + " overflows P*Q");
    return n;
}

InputMatrix::InputMatrix(std::size_t rows, std::size_t cols)
    : InputMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

InputMatrix::InputMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0)
        throw ParameterError("input matrix " + dims(rows, cols) + " is empty");
    std::size_t n = 0;
    if (__builtin_mul_overflow(rows, cols, &n) || data_.size() != n)
        throw ParameterError("input matrix " + dims(rows, cols) + " given " +
                             std::to_string(data_.size()) + " entries");
}

InputMatrix InputMatrix::generate(std::size_t rows, std::size_t cols,
                                  const std::function<Complex(std::size_t, std::size_t)>& f) {
    std::vector<Complex> data;
    data.reserve(rows * cols);
    for (std::size_t r = 1; r <= rows; ++r)
        for (std::size_t c = 1; c <= cols; ++c)
            data.push_back(f(r, c));
    return InputMatrix(rows, cols, std::move(data));
}

InputMatrix InputMatrix::random(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto draw = [&gen] {
        return 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0;
    };
    return generate(rows, cols, [&](std::size_t, std::size_t) {
        const double re = draw();
        const double im = draw();
        return Complex{re, im};
    });
}

Complex InputMatrix::operator()(std::size_t r, std::size_t c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_)
        throw IndexError("A(" + std::to_string(r) + "," + std::to_string(c) +
                         ") outside " + dims(rows_, cols_));
    return data_[(r - 1) * cols_ + (c - 1)];
}

std::size_t column_stack_index(std::size_t r_rel, std::size_t c_rel, const WindowSpec& w) {
    if (r_rel < 1 || r_rel > w.height || c_rel < 1 || c_rel > w.width)
        throw IndexError("window position (" + std::to_string(r_rel) + "," +
                         std::to_string(c_rel) + ") outside " + dims(w.height, w.width));
    return w.height * (c_rel - 1) + r_rel;
}

std::size_t packed_offset(std::size_t r, std::size_t c, std::size_t dim) {
    if (r > c)
        throw IndexError("(" + std::to_string(r) + "," + std::to_string(c) +
                         ") is below the diagonal; conjugate-flip before packed access");
    if (r < 1 || c > dim)
        throw IndexError("(" + std::to_string(r) + "," + std::to_string(c) +
                         ") outside a " + std::to_string(dim) + "-dim matrix");
    return packed_offset_unchecked(r, c, dim);
}

std::size_t CovarianceMatrix::packed_size(std::size_t dim) {
    std::size_t prod = 0;
    if (dim == std::numeric_limits<std::size_t>::max() || __builtin_mul_overflow(dim, dim + 1, &prod))
        throw CapacityError("packed triangle of dim " + std::to_string(dim) + " overflows");
    const std::size_t n = prod / 2;
    if (n > std::vector<Complex>().max_size())
        throw CapacityError("packed triangle of dim " + std::to_string(dim) + " exceeds storage");
    return n;
}

CovarianceMatrix::CovarianceMatrix(std::size_t dim) : dim_(dim) {
    packed_.resize(packed_size(dim));
}

Complex CovarianceMatrix::operator()(std::size_t r, std::size_t c) const {
    if (r <= c)
        return packed_[packed_offset(r, c, dim_)];
    return conj(packed_[packed_offset(c, r, dim_)]);
}

std::vector<Complex> CovarianceMatrix::dense() const {
    std::vector<Complex> out(dim_ * dim_);
    std::size_t k = 0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c, ++k) {
            out[r * dim_ + c] = packed_[k];
            out[c * dim_ + r] = conj(packed_[k]);
        }
    }
    return out;
}

double relative_frobenius_distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size())
        throw ParameterError("frobenius distance over arrays of different length");
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += (a[i] - b[i]).norm2();
        ref += b[i].norm2();
    }
    if (ref == 0.0)
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(diff / ref);
}

double max_relative_entry_difference(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size())
        throw ParameterError("entry difference over arrays of different length");
    double scale = 0.0;
    for (const auto& z : b)
        scale = std::max(scale, std::sqrt(z.norm2()));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::sqrt((a[i] - b[i]).norm2());
        if (d == 0.0)
            continue;
        if (scale == 0.0)
            return std::numeric_limits<double>::infinity();
        worst = std::max(worst, d / scale);
    }
    return worst;
}

} // namespace covest
