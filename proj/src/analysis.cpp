#include "covest/analysis.hpp"

#include <charconv>
#include <numeric>

#include "checked.hpp"
#include "covest/baseline.hpp"

namespace covest {

using detail::checked_add;
using detail::checked_mul;

namespace {

// a * b / 2 for a, b of opposite parity.
std::uint64_t half_product(std::uint64_t a, std::uint64_t b) {
    return (a % 2 == 0) ? checked_mul(a / 2, b) : checked_mul(a, b / 2);
}

} // namespace

std::string CostModel::ratio_fraction() const {
    if (ratio_den == 1)
        return std::to_string(ratio_num);
    return std::to_string(ratio_num) + "/" + std::to_string(ratio_den);
}

std::string CostModel::ratio_decimal() const {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), ratio());
    return std::string(buf, res.ptr);
}

CostModel closed_form_counts(std::uint64_t n, std::uint64_t m, std::uint64_t p, std::uint64_t q) {
    CostModel cm;
    cm.n = n;
    cm.m = m;
    cm.p = p;
    cm.q = q;
    const auto naive = count_naive_ops(n, m, WindowSpec{p, q});
    cm.sm = naive.multiplications;
    cm.sa = naive.additions;

    const std::uint64_t row1 = half_product(p, checked_add(checked_mul(2, n), 1) - p);
    const std::uint64_t col1 = half_product(q, checked_add(checked_mul(2, m), 1) - q);
    cm.um1 = checked_mul(row1, col1);
    const std::uint64_t row2 = half_product(p - 1, checked_mul(2, n) - p);
    const std::uint64_t col2 = half_product(q - 1, checked_mul(2, m) - q);
    cm.um2 = checked_mul(row2, col2);
    cm.um = checked_add(cm.um1, cm.um2);
    cm.um_hat = checked_mul(2, cm.um1);

    const std::uint64_t g = std::gcd(cm.sm, cm.um_hat);
    cm.ratio_num = cm.sm / g;
    cm.ratio_den = cm.um_hat / g;
    return cm;
}

std::uint64_t upper_triangle_size(std::uint64_t p, std::uint64_t q) {
    const std::uint64_t pq = checked_mul(p, q);
    return half_product(pq, checked_add(pq, 1));
}

EtaGroups eta_group_totals(std::uint64_t p, std::uint64_t q) {
    return {checked_mul(half_product(p, p + 1), half_product(q, q + 1)),
            checked_mul(half_product(p, p - 1), half_product(q, q - 1))};
}

} // namespace covest
