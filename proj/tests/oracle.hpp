#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// shares code with the library beyond the value types; every quantity is
// recomputed from its definition by exhaustive scanning.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "covest/combinations.hpp"
#include "covest/core.hpp"

namespace oracle {

using covest::Complex;
using covest::InputMatrix;

// Window-relative (row, col) of 1-based stack index i.
inline std::pair<std::size_t, std::size_t> stack_position(std::size_t i, std::size_t p) {
    return {(i - 1) % p + 1, (i - 1) / p + 1};
}

// Upper triangle of the covariance estimate, row by row, each entry summed
// independently over every in-bounds window.
inline std::vector<Complex> covariance(const InputMatrix& a, std::size_t p, std::size_t q) {
    const std::size_t dim = p * q;
    std::vector<Complex> out;
    out.reserve(dim * (dim + 1) / 2);
    for (std::size_t i = 1; i <= dim; ++i) {
        const auto [ri, ci] = stack_position(i, p);
        for (std::size_t j = i; j <= dim; ++j) {
            const auto [rj, cj] = stack_position(j, p);
            Complex sum;
            for (std::size_t wp = 1; wp + p - 1 <= a.rows(); ++wp) {
                for (std::size_t wq = 1; wq + q - 1 <= a.cols(); ++wq) {
                    const Complex x = a(wp + ri - 1, wq + ci - 1);
                    const Complex y = a(wp + rj - 1, wq + cj - 1);
                    sum.re += x.re * y.re + x.im * y.im;
                    sum.im += x.im * y.re - x.re * y.im;
                }
            }
            out.push_back(sum);
        }
    }
    return out;
}

// Full Hermitian matrix, row-major, rebuilt from the upper triangle.
inline std::vector<Complex> dense_from_upper(const std::vector<Complex>& upper, std::size_t dim) {
    std::vector<Complex> out(dim * dim);
    std::size_t k = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j, ++k) {
            out[i * dim + j] = upper[k];
            out[j * dim + i] = Complex{upper[k].re, -upper[k].im};
        }
    }
    return out;
}

// Distances (dr, dc) between window elements whose stack indices satisfy
// i <= j, i.e. the combinations that reach the upper triangle.
inline std::set<covest::Combination> unique_combinations(std::size_t p, std::size_t q) {
    std::set<covest::Combination> out;
    const std::size_t dim = p * q;
    for (std::size_t i = 1; i <= dim; ++i) {
        for (std::size_t j = i; j <= dim; ++j) {
            const auto [ri, ci] = stack_position(i, p);
            const auto [rj, cj] = stack_position(j, p);
            out.insert({static_cast<int>(rj) - static_cast<int>(ri), static_cast<int>(cj) - static_cast<int>(ci)});
        }
    }
    return out;
}

inline std::vector<covest::ElementPair> pairs(covest::Combination c, std::size_t rows, std::size_t cols) {
    std::vector<covest::ElementPair> out;
    for (std::size_t r1 = 1; r1 <= rows; ++r1)
        for (std::size_t c1 = 1; c1 <= cols; ++c1)
            for (std::size_t r2 = 1; r2 <= rows; ++r2)
                for (std::size_t c2 = 1; c2 <= cols; ++c2)
                    if (static_cast<long>(r2) - static_cast<long>(r1) == c.dr &&
                        static_cast<long>(c2) - static_cast<long>(c1) == c.dc)
                        out.push_back({{r1, c1}, {r2, c2}});
    std::sort(out.begin(), out.end());
    return out;
}

// Output indices of a pair's product found by trying every window.
inline std::vector<covest::OutputIndex> write_indices(const covest::ElementPair& pr, std::size_t p,
                                                      std::size_t q, std::size_t rows, std::size_t cols) {
    std::vector<covest::OutputIndex> out;
    for (std::size_t wp = 1; wp + p - 1 <= rows; ++wp) {
        for (std::size_t wq = 1; wq + q - 1 <= cols; ++wq) {
            auto inside = [&](const covest::ElementPosition& e) {
                return e.row >= wp && e.row < wp + p && e.col >= wq && e.col < wq + q;
            };
            if (!inside(pr.first) || !inside(pr.second))
                continue;
            const std::size_t i = (pr.first.col - wq) * p + (pr.first.row - wp) + 1;
            const std::size_t j = (pr.second.col - wq) * p + (pr.second.row - wp) + 1;
            out.push_back({i, j});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<covest::OutputIndex> upper_triangle(std::size_t dim) {
    std::vector<covest::OutputIndex> out;
    for (std::size_t i = 1; i <= dim; ++i)
        for (std::size_t j = i; j <= dim; ++j)
            out.push_back({i, j});
    return out;
}

// Deterministic matrices for parameter sweeps.
inline InputMatrix seeded(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    return InputMatrix::random(rows, cols, seed);
}

} // namespace oracle
