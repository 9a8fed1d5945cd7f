#include "covest/combinations.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace covest {

namespace {

using Signed = std::int64_t;

Signed as_signed(std::size_t v) { return static_cast<Signed>(v); }

std::string describe(Combination c) {
    return "(" + std::to_string(c.dr) + "," + std::to_string(c.dc) + ")";
}

std::uint64_t shrink(std::size_t extent, int delta) {
    const Signed left = as_signed(extent) - std::abs(delta);
    return left > 0 ? static_cast<std::uint64_t>(left) : 0;
}

void require_unique(Combination c, const WindowSpec& w) {
    if (!in_unique_set(c, w))
        throw NotACombination("distance " + describe(c) + " is not a unique combination for a " +
                              std::to_string(w.height) + "x" + std::to_string(w.width) + " window");
}

} // namespace

bool in_unique_set(Combination c, const WindowSpec& w) {
    const Signed p = as_signed(w.height);
    const Signed q = as_signed(w.width);
    const bool group1 = c.dr >= 0 && c.dr <= p - 1 && c.dc >= 0 && c.dc <= q - 1;
    const bool group2 = c.dr >= -(p - 1) && c.dr <= -1 && c.dc >= 1 && c.dc <= q - 1;
    return group1 || group2;
}

std::vector<Combination> enumerate_unique_combinations(const WindowSpec& w) {
    const int p = static_cast<int>(w.height);
    const int q = static_cast<int>(w.width);
    std::vector<Combination> out;
    out.reserve(w.stack_length() + (w.height - 1) * (w.width - 1));
    for (int dr = 0; dr <= p - 1; ++dr)
        for (int dc = 0; dc <= q - 1; ++dc)
            out.push_back({dr, dc});
    for (int dr = -(p - 1); dr <= -1; ++dr)
        for (int dc = 1; dc <= q - 1; ++dc)
            out.push_back({dr, dc});
    return out;
}

std::uint64_t mu(Combination c, std::size_t rows, std::size_t cols) {
    return shrink(rows, c.dr) * shrink(cols, c.dc);
}

std::uint64_t eta(Combination c, const WindowSpec& w) {
    return shrink(w.height, c.dr) * shrink(w.width, c.dc);
}

std::size_t diagonal_offset(Combination c, const WindowSpec& w) {
    require_unique(c, w);
    return static_cast<std::size_t>(as_signed(w.height) * c.dc + c.dr);
}

std::vector<ElementPair> enumerate_pairs(Combination c, std::size_t rows, std::size_t cols) {
    const Signed n = as_signed(rows);
    const Signed m = as_signed(cols);
    const Signed r_lo = std::max<Signed>(1, 1 - c.dr);
    const Signed r_hi = std::min<Signed>(n, n - c.dr);
    const Signed c_lo = std::max<Signed>(1, 1 - c.dc);
    const Signed c_hi = std::min<Signed>(m, m - c.dc);
    std::vector<ElementPair> out;
    if (r_lo > r_hi || c_lo > c_hi)
        return out;
    out.reserve(static_cast<std::size_t>((r_hi - r_lo + 1) * (c_hi - c_lo + 1)));
    for (Signed r = r_lo; r <= r_hi; ++r) {
        for (Signed col = c_lo; col <= c_hi; ++col) {
            out.push_back({{static_cast<std::size_t>(r), static_cast<std::size_t>(col)},
                           {static_cast<std::size_t>(r + c.dr), static_cast<std::size_t>(col + c.dc)}});
        }
    }
    return out;
}

PlacementRange placements(const ElementPair& pair, const WindowSpec& w, std::size_t rows,
                          std::size_t cols) {
    const Signed r_min = as_signed(std::min(pair.first.row, pair.second.row));
    const Signed r_max = as_signed(std::max(pair.first.row, pair.second.row));
    const Signed c_min = as_signed(std::min(pair.first.col, pair.second.col));
    const Signed c_max = as_signed(std::max(pair.first.col, pair.second.col));
    const Signed p = as_signed(w.height);
    const Signed q = as_signed(w.width);
    const Signed p_lo = std::max<Signed>(1, r_max - p + 1);
    const Signed p_hi = std::min<Signed>(r_min, as_signed(rows) - p + 1);
    const Signed q_lo = std::max<Signed>(1, c_max - q + 1);
    const Signed q_hi = std::min<Signed>(c_min, as_signed(cols) - q + 1);
    if (p_lo > p_hi || q_lo > q_hi)
        return {};
    return {static_cast<std::size_t>(p_lo), static_cast<std::size_t>(p_hi),
            static_cast<std::size_t>(q_lo), static_cast<std::size_t>(q_hi)};
}

WritePattern write_indices(const ElementPair& pair, const WindowSpec& w, std::size_t rows,
                           std::size_t cols) {
    w.validate_for(rows, cols);
    for (const auto& e : {pair.first, pair.second}) {
        if (e.row < 1 || e.row > rows || e.col < 1 || e.col > cols)
            throw IndexError("element (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                             ") outside the input");
    }
    const Combination c{static_cast<int>(as_signed(pair.second.row) - as_signed(pair.first.row)),
                        static_cast<int>(as_signed(pair.second.col) - as_signed(pair.first.col))};
    require_unique(c, w);

    const PlacementRange range = placements(pair, w, rows, cols);
    WritePattern out;
    out.indices.reserve(range.count());
    if (range.count() == 0)
        return out;
    for (std::size_t p = range.p_hi; p >= range.p_lo; --p) {
        for (std::size_t q = range.q_hi; q >= range.q_lo; --q) {
            const std::size_t row = column_stack_index(pair.first.row - p + 1, pair.first.col - q + 1, w);
            const std::size_t col = column_stack_index(pair.second.row - p + 1, pair.second.col - q + 1, w);
            out.indices.push_back({row, col});
        }
    }
    return out;
}

SegmentLayout::SegmentLayout(Combination c, const WindowSpec& w)
    : window_height_(w.height),
      row_lo_(static_cast<std::size_t>(std::max(1, 1 - c.dr))),
      height_(static_cast<std::size_t>(shrink(w.height, c.dr))),
      width_(static_cast<std::size_t>(shrink(w.width, c.dc))),
      diagonal_(diagonal_offset(c, w)) {}

} // namespace covest
