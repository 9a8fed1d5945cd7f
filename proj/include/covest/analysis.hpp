#pragma once

// Closed-form operation counts for the naive and combination-based methods.
// Everything is exact 64-bit integer arithmetic; CapacityError on overflow.
//
//   SM = SA   = (N-P)(M-Q) P^2 Q^2
//   UM1       = P(2N-P+1)/2 * Q(2M-Q+1)/2        unique products, group 1
//   UM2       = (P-1)(2N-P)/2 * (Q-1)(2M-Q)/2    unique products, group 2
//   UM        = UM1 + UM2
//   UM_hat    = 2 * P(2N-P+1)/2 * Q(2M-Q+1)/2    conservative bound on UM
//
// Each halved factor is a product of two integers of opposite parity, so it
// is evaluated exactly by multiplying first and halving second.

#include <cstdint>
#include <string>

namespace covest {

struct CostModel {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t sm = 0;
    std::uint64_t sa = 0;
    std::uint64_t um1 = 0;
    std::uint64_t um2 = 0;
    std::uint64_t um = 0;
    std::uint64_t um_hat = 0;
    /// SM / UM_hat reduced to lowest terms.
    std::uint64_t ratio_num = 0;
    std::uint64_t ratio_den = 1;

    double ratio() const { return static_cast<double>(ratio_num) / static_cast<double>(ratio_den); }

    /// "361/8"; a plain integer when the denominator is 1.
    std::string ratio_fraction() const;

    /// Shortest decimal that round-trips ratio(), e.g. "45.125".
    std::string ratio_decimal() const;
};

/// Throws InvalidWindow for P > N, Q > M or a zero window dimension.
CostModel closed_form_counts(std::uint64_t n, std::uint64_t m, std::uint64_t p, std::uint64_t q);

/// PQ(PQ+1)/2.
std::uint64_t upper_triangle_size(std::uint64_t p, std::uint64_t q);

/// Indices owned by each combination group: eta1 = P(P+1)/2 * Q(Q+1)/2 and
/// eta2 = P(P-1)/2 * Q(Q-1)/2.
struct EtaGroups {
    std::uint64_t group1 = 0;
    std::uint64_t group2 = 0;
};

EtaGroups eta_group_totals(std::uint64_t p, std::uint64_t q);

} // namespace covest
