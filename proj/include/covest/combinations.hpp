#pragma once

// Combinations: the unit of work of the combination-based estimator.
//
// A combination (dr, dc) is the set of all products A(r1,c1) * conj(A(r2,c2))
// whose elements sit at distance (r2 - r1, c2 - c1) = (dr, dc). The unique
// set UC keeps one of each conjugate-mirror pair:
//
//   group 1:  0 <= dr <= P-1,      0 <= dc <= Q-1
//   group 2:  -(P-1) <= dr <= -1,  1 <= dc <= Q-1
//
// |UC| = PQ + (P-1)(Q-1). Every product of combination (dr, dc) lands on
// output diagonal col - row = dc*P + dr, the combinations' write sets are
// pairwise disjoint, and together they tile the upper triangle exactly.
// That disjointness is what lets the engine run combinations concurrently
// without synchronizing on the output.

#include <compare>
#include <cstdint>
#include <vector>

#include "covest/core.hpp"

namespace covest {

struct Combination {
    int dr = 0;
    int dc = 0;
    friend constexpr auto operator<=>(const Combination&, const Combination&) = default;
};

/// 1-based position of an element in the input matrix.
struct ElementPosition {
    std::size_t row = 1;
    std::size_t col = 1;
    friend constexpr auto operator<=>(const ElementPosition&, const ElementPosition&) = default;
};

/// Ordered pair; the product is first * conj(second).
struct ElementPair {
    ElementPosition first;
    ElementPosition second;
    friend constexpr auto operator<=>(const ElementPair&, const ElementPair&) = default;
};

/// 1-based output index, row <= col.
struct OutputIndex {
    std::size_t row = 1;
    std::size_t col = 1;
    friend constexpr auto operator<=>(const OutputIndex&, const OutputIndex&) = default;
};

struct WritePattern {
    std::vector<OutputIndex> indices;
};

bool in_unique_set(Combination c, const WindowSpec& w);

/// UC in a fixed order: group 1 row-major by (dr, dc), then group 2 likewise.
std::vector<Combination> enumerate_unique_combinations(const WindowSpec& w);

/// (N - |dr|)(M - |dc|): element pairs at this distance inside an N x M input.
std::uint64_t mu(Combination c, std::size_t rows, std::size_t cols);

/// (P - |dr|)(Q - |dc|): output indices the combination owns.
std::uint64_t eta(Combination c, const WindowSpec& w);

/// dc*P + dr, the output diagonal the combination writes to.
std::size_t diagonal_offset(Combination c, const WindowSpec& w);

/// All pairs of the combination, first elements swept row-major.
std::vector<ElementPair> enumerate_pairs(Combination c, std::size_t rows, std::size_t cols);

/// Window placements containing a pair: p in [p_lo, p_hi], q in [q_lo, q_hi].
struct PlacementRange {
    std::size_t p_lo = 1;
    std::size_t p_hi = 0;
    std::size_t q_lo = 1;
    std::size_t q_hi = 0;

    std::size_t count() const {
        return (p_hi >= p_lo && q_hi >= q_lo) ? (p_hi - p_lo + 1) * (q_hi - q_lo + 1) : 0;
    }
};

PlacementRange placements(const ElementPair& pair, const WindowSpec& w, std::size_t rows,
                          std::size_t cols);

/// Output indices the pair's product is added to, one per window placement
/// containing both elements. Emission order starts at the initial placement
/// (lowest, rightmost window) and sweeps leftward, then moves one row up
/// and sweeps leftward again. Throws NotACombination if the pair's distance
/// is outside UC and IndexError if an element lies outside the input.
WritePattern write_indices(const ElementPair& pair, const WindowSpec& w, std::size_t rows,
                           std::size_t cols);

/// Contiguous layout of a combination's eta owned indices, used for the
/// per-combination scratch arrays. A write is identified by the window-
/// relative position (r_rel, c_rel) of the pair's first element; for fixed
/// c_rel consecutive r_rel map to consecutive slots and to consecutive
/// entries of the owned diagonal.
class SegmentLayout {
public:
    SegmentLayout(Combination c, const WindowSpec& w);

    std::size_t size() const { return height_ * width_; }
    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    std::size_t first_row() const { return row_lo_; }
    std::size_t diagonal() const { return diagonal_; }

    std::size_t slot(std::size_t r_rel, std::size_t c_rel) const {
        return (r_rel - row_lo_) + height_ * (c_rel - 1);
    }

    OutputIndex index_of(std::size_t slot) const {
        const std::size_t r_rel = row_lo_ + slot % height_;
        const std::size_t c_rel = 1 + slot / height_;
        const std::size_t row = r_rel + window_height_ * (c_rel - 1);
        return {row, row + diagonal_};
    }

private:
    std::size_t window_height_;
    std::size_t row_lo_;
    std::size_t height_;
    std::size_t width_;
    std::size_t diagonal_;
};

} // namespace covest
