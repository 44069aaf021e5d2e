#include <doctest.h>

#include <random>
#include <stdexcept>

#include "partlat/counting.hpp"
#include "partlat/oracle.hpp"

using namespace partlat;
using oracle::Parity;

TEST_CASE("p by every method")
{
    const Integer expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int m = 0; m < 10; ++m) {
        CHECK(p(m) == expected[m]);
        CHECK(p(m, PartitionMethod::row_sum) == expected[m]);
        CHECK(p(m, PartitionMethod::oracle) == expected[m]);
    }
    CHECK(p(100) == 190569292);
    CHECK(p(-1) == 0);
}

TEST_CASE("exact parts, at most, boxes and frames")
{
    CHECK(p_exact(6, 2) == 3);
    CHECK(p_exact(6, 0) == 0);
    CHECK(p_exact(0, 0) == 1);
    CHECK(p_atmost(6, 3) == 7);
    CHECK(p_box(3, 3, 4) == 3);
    CHECK(p_box(3, 3, 5) == 3);
    CHECK(exact_frame(4, 3, 8) == 2);
    CHECK(exact_frame(4, 3, 8) == p_box(3, 2, 2));
    CHECK(exact_frame(3, 3, 7) == 2);
    CHECK(exact_frame(7, 1, 7) == 1);
    CHECK(p_fixed_parts(2, 7) == 3);
    CHECK(p_fixed_largest(7, 7) == 1);
    CHECK(p_fixed_parts(3, 13) == 14);
}

TEST_CASE("minimum part by shifting")
{
    CHECK(p_min_part(6, 3, 2) == 1);
    CHECK(p_min_part(-5, 5, -2) == p_exact(10, 5));
    for (int m = 0; m <= 12; ++m)
        for (int k = 0; k <= m; ++k)
            CHECK(p_min_part(m, k, 1) == p_exact(m, k));
}

TEST_CASE("odd, even and mixed")
{
    const ParitySplit s9 = odd_even_mixed(9);
    CHECK(s9.odd == 8);
    CHECK(s9.even == 0);
    CHECK(s9.mixed == 22);
    CHECK(s9.total == 30);
    const ParitySplit s6 = odd_even_mixed(6);
    CHECK(s6.odd == 4);
    CHECK(s6.even == 3);
    CHECK(s6.mixed == 4);
    CHECK(odd_even_mixed(1).odd == 1);
    CHECK_THROWS(odd_even_mixed(0));
}

TEST_CASE("distinct parts")
{
    const DistinctRow r10 = distinct_table(10);
    CHECK(r10.by_parts == std::vector<Integer>{1, 4, 4, 1});
    CHECK(r10.total == 10);
    CHECK(r10.difference == 0);
    CHECK(distinct_table(12).total == 15);
    CHECK(distinct_table(12).difference == 1);
    CHECK(distinct_table(5).difference == -1);
}

TEST_CASE("Franklin trapezoids")
{
    const int sums[][2] = {{1, 2}, {5, 7}, {12, 15}};
    for (int k = 1; k <= 3; ++k) {
        const auto [a, b] = franklin_trapezoids(k);
        CHECK(a.sum() == sums[k - 1][0]);
        CHECK(b.sum() == sums[k - 1][1]);
        CHECK(a.nonzero_count() == static_cast<std::size_t>(k));
        const auto parts = a.nonzero_parts();
        for (std::size_t i = 1; i < parts.size(); ++i)
            CHECK(parts[i - 1] - parts[i] == 1);
    }
    CHECK(franklin_trapezoids(2).first == Partition::of({3, 2}));
}

TEST_CASE("unit-difference table")
{
    const IntTable t = unit_diff_table(6);
    CHECK(t.row(6) == std::vector<Integer>{4, 2, 2, 1, 1, 0, 1});
    CHECK(t.at(4, 0) == 2);
    for (int i = 0; i <= 6; ++i)
        CHECK(t.at(i, i) == 1);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= i; ++j)
            CHECK(t.at(i, j) == t.at(i - 1, j - 1));
}

TEST_CASE("layers, diagonals and binomial rows")
{
    CHECK(layer_count(16, 10) == 1);
    CHECK(layer_count(13, 7) == 7);
    for (int d = 1; d <= 14; ++d)
        CHECK(diagonal_sum(d) == (Integer{1} << (d - 1)));
    CHECK(binomial_row(5) == std::vector<Integer>{1, 4, 6, 4, 1});
    const IntTable layers = layer_table(15);
    CHECK(layers.row_sums().back() == 176);
}

TEST_CASE("right-hand neighbor table")
{
    const IntTable t = right_hand_neighbor_table(7);
    CHECK(t.row(2) == std::vector<Integer>{1, 0, 0, 0, 0, 0});
    CHECK(t.row(4) == std::vector<Integer>{1, 2, 1, 0, 0, 0});
    CHECK(t.row(7) == std::vector<Integer>{1, 5, 6, 4, 2, 1});
    for (int m = 2; m <= 7; ++m)
        CHECK(right_hand_neighbor_total(m) == t.row_sums()[static_cast<std::size_t>(m - 2)]);
}

TEST_CASE("tables carry the expected annotations")
{
    const IntTable t = odd_even_mixed_table(9);
    CHECK(t.annotation("odd").back() == 8);
    CHECK(t.annotation("p").back() == 30);
    CHECK(distinct_parts_table(5).annotation("difference").back() == -1);
    CHECK_THROWS_AS(t.annotation("nope"), std::out_of_range);
}

TEST_CASE("property: recurrences equal the oracle on random constraints")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> totals(0, 25);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = totals(rng);
        std::uniform_int_distribution<int> bound(0, m + 1);
        const int a = bound(rng);
        const int b = bound(rng);
        REQUIRE(p_exact(m, a) == oracle::count({.total = m, .exact_parts = a}));
        REQUIRE(p_atmost(m, a) == oracle::count({.total = m, .max_parts = a}));
        REQUIRE(p_box(a, b, m) == oracle::count({.total = m, .max_part = a, .max_parts = b}));
        REQUIRE(exact_frame(a, b, m) == oracle::count({.total = m, .exact_parts = b, .exact_max_part = a}));
        REQUIRE(layer_count(m, a) == oracle::count({.total = m, .layer = a}));
        if (m >= 1) {
            REQUIRE(odd_with_parts(m, a) == oracle::count({.total = m, .exact_parts = a, .parity = Parity::all_odd}));
            REQUIRE(distinct_with_parts(m, a) == oracle::count({.total = m, .exact_parts = a, .parity = Parity::distinct}));
        }
        std::uniform_int_distribution<int> low(1, 4);
        const int r = low(rng);
        REQUIRE(p_min_part(m, a, r) == oracle::count({.total = m, .exact_parts = a, .min_part = r}));
    }
}

TEST_CASE("overflow is reported, not wrapped")
{
    CHECK_THROWS_AS(p(500), std::overflow_error);
}
