#include <doctest.h>

#include <map>
#include <set>

#include "covest/combinations.hpp"
#include "covest/errors.hpp"
#include "oracle.hpp"

using namespace covest;

TEST_CASE("unique combination set size and membership") {
    CHECK(enumerate_unique_combinations({13, 13}).size() == 313);
    CHECK(enumerate_unique_combinations({8, 8}).size() == 113);
    CHECK(enumerate_unique_combinations({1, 1}).size() == 1);
    for (std::size_t p = 1; p <= 6; ++p) {
        for (std::size_t q = 1; q <= 6; ++q) {
            const WindowSpec w{p, q};
            const auto uc = enumerate_unique_combinations(w);
            CHECK(uc.size() == p * q + (p - 1) * (q - 1));
            const std::set<Combination> got(uc.begin(), uc.end());
            CHECK(got.size() == uc.size());
            CHECK(got == oracle::unique_combinations(p, q));
            for (const auto& c : uc)
                CHECK(in_unique_set(c, w));
        }
    }
    const WindowSpec w{3, 3};
    CHECK_FALSE(in_unique_set({0, -1}, w));
    CHECK_FALSE(in_unique_set({-1, 0}, w));
    CHECK_FALSE(in_unique_set({3, 0}, w));
    CHECK_FALSE(in_unique_set({0, 3}, w));
    CHECK(in_unique_set({-2, 2}, w));
}

TEST_CASE("enumeration order: group one row-major, then group two") {
    const auto uc = enumerate_unique_combinations({2, 3});
    const std::vector<Combination> want{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {-1, 1}, {-1, 2}};
    CHECK(uc == want);
}

TEST_CASE("mu and eta") {
    CHECK(mu({1, 1}, 4, 4) == 9);
    CHECK(mu({-2, 1}, 5, 3) == 6);
    CHECK(mu({0, 0}, 32, 32) == 1024);
    CHECK(mu({5, 0}, 4, 4) == 0);
    CHECK(eta({0, 0}, {13, 13}) == 169);
    CHECK(eta({-12, 12}, {13, 13}) == 1);
    for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t m = 1; m <= 7; ++m)
            for (const auto& c : enumerate_unique_combinations({std::min<std::size_t>(n, 3), std::min<std::size_t>(m, 4)}))
                CHECK(mu(c, n, m) == oracle::pairs(c, n, m).size());
}

TEST_CASE("diagonal offset") {
    const WindowSpec w{4, 3};
    CHECK(diagonal_offset({0, 0}, w) == 0);
    CHECK(diagonal_offset({1, 0}, w) == 1);
    CHECK(diagonal_offset({-3, 1}, w) == 1);
    CHECK(diagonal_offset({2, 2}, w) == 10);
    CHECK_THROWS_AS(diagonal_offset({0, -1}, w), NotACombination);
}

TEST_CASE("pair enumeration") {
    const auto pairs = enumerate_pairs({-1, 1}, 3, 3);
    REQUIRE(pairs.size() == 4);
    CHECK(pairs.front() == ElementPair{{2, 1}, {1, 2}});
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t m = 1; m <= 5; ++m) {
            for (const auto& c : enumerate_unique_combinations({std::min<std::size_t>(n, 3), std::min<std::size_t>(m, 3)})) {
                auto got = enumerate_pairs(c, n, m);
                CHECK(std::is_sorted(got.begin(), got.end(), [](const ElementPair& a, const ElementPair& b) {
                    return a.first < b.first;
                }));
                std::sort(got.begin(), got.end());
                CHECK(got == oracle::pairs(c, n, m));
            }
        }
    }
}

TEST_CASE("write indices of a small pair") {
    const auto wp = write_indices({{2, 1}, {2, 2}}, {2, 2}, 3, 2);
    const std::vector<OutputIndex> want{{1, 3}, {2, 4}};
    CHECK(wp.indices == want);
}

TEST_CASE("write indices agree with window scanning") {
    for (std::size_t p = 1; p <= 3; ++p) {
        for (std::size_t q = 1; q <= 3; ++q) {
            const WindowSpec w{p, q};
            for (std::size_t n = p; n <= p + 3; ++n) {
                for (std::size_t m = q; m <= q + 3; ++m) {
                    for (const auto& c : enumerate_unique_combinations(w)) {
                        for (const auto& pr : enumerate_pairs(c, n, m)) {
                            auto got = write_indices(pr, w, n, m).indices;
                            CHECK(placements(pr, w, n, m).count() == got.size());
                            std::sort(got.begin(), got.end());
                            CHECK(got == oracle::write_indices(pr, p, q, n, m));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("write indices are emitted from the lowest, rightmost window") {
    // Interior pair on a large input: every placement is available.
    const WindowSpec w{3, 3};
    const ElementPair pr{{5, 5}, {6, 6}};
    const auto idx = write_indices(pr, w, 10, 10).indices;
    REQUIRE(idx.size() == 4);
    // Lowest, rightmost window (p=5, q=5) puts the first element at (1, 1).
    CHECK(idx.front() == OutputIndex{1, 5});
    CHECK(idx[1] == OutputIndex{4, 8});  // q=4: c_rel 2
    CHECK(idx[2] == OutputIndex{2, 6});  // p=4, q=5
    CHECK(idx.back() == OutputIndex{5, 9});
}

TEST_CASE("write index errors") {
    const WindowSpec w{2, 2};
    CHECK_THROWS_AS(write_indices({{1, 1}, {1, 1}}, {3, 3}, 2, 2), InvalidWindow);
    CHECK_THROWS_AS(write_indices({{1, 1}, {3, 1}}, w, 3, 3), NotACombination);
    CHECK_THROWS_AS(write_indices({{1, 2}, {1, 1}}, w, 3, 3), NotACombination);
    CHECK_THROWS_AS(write_indices({{1, 1}, {1, 4}}, w, 3, 3), IndexError);
    CHECK_THROWS_AS(write_indices({{0, 1}, {1, 1}}, w, 3, 3), IndexError);
}

TEST_CASE("write sets are disjoint, tile the upper triangle, and stay on their diagonal") {
    for (std::size_t p = 1; p <= 4; ++p) {
        for (std::size_t q = 1; q <= 4; ++q) {
            const WindowSpec w{p, q};
            const std::size_t n = 2 * p;
            const std::size_t m = 2 * q;
            std::map<OutputIndex, Combination> owner;
            bool disjoint = true;
            for (const auto& c : enumerate_unique_combinations(w)) {
                std::set<OutputIndex> own;
                for (const auto& pr : enumerate_pairs(c, n, m)) {
                    for (const auto& oi : write_indices(pr, w, n, m).indices) {
                        CHECK(oi.col - oi.row == diagonal_offset(c, w));
                        own.insert(oi);
                    }
                }
                CHECK(own.size() == eta(c, w));
                for (const auto& oi : own)
                    disjoint = owner.emplace(oi, c).second && disjoint;
            }
            CHECK(disjoint);
            std::vector<OutputIndex> covered;
            for (const auto& [oi, c] : owner)
                covered.push_back(oi);
            CHECK(covered == oracle::upper_triangle(p * q));
        }
    }
}

TEST_CASE("segment layout maps slots onto the owned indices") {
    for (std::size_t p = 1; p <= 5; ++p) {
        for (std::size_t q = 1; q <= 4; ++q) {
            const WindowSpec w{p, q};
            for (const auto& c : enumerate_unique_combinations(w)) {
                const SegmentLayout lay(c, w);
                CHECK(lay.size() == eta(c, w));
                CHECK(lay.diagonal() == diagonal_offset(c, w));
                std::set<OutputIndex> from_slots;
                for (std::size_t s = 0; s < lay.size(); ++s)
                    from_slots.insert(lay.index_of(s));
                CHECK(from_slots.size() == lay.size());

                std::set<OutputIndex> owned;
                for (const auto& pr : enumerate_pairs(c, 2 * p, 2 * q))
                    for (const auto& oi : write_indices(pr, w, 2 * p, 2 * q).indices)
                        owned.insert(oi);
                CHECK(from_slots == owned);

                for (std::size_t c_rel = 1; c_rel <= lay.width(); ++c_rel) {
                    for (std::size_t r_rel = lay.first_row(); r_rel < lay.first_row() + lay.height(); ++r_rel) {
                        const auto oi = lay.index_of(lay.slot(r_rel, c_rel));
                        CHECK(oi.row == column_stack_index(r_rel, c_rel, w));
                    }
                }
            }
        }
    }
}
