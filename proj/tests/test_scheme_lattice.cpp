#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "partlat/counting.hpp"
#include "partlat/lattice.hpp"
#include "partlat/oracle.hpp"
#include "partlat/scheme.hpp"
#include "partlat/verify.hpp"

using namespace partlat;

namespace {

int hamming(const std::vector<int>& a, const std::vector<int>& b)
{
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

// Brute-force pair scan over all nodes.
std::size_t edges_at_hamming(const OrbitLattice& l, int d)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < l.node_count(); ++i)
        for (std::size_t j = i + 1; j < l.node_count(); ++j)
            n += hamming(l.nodes()[i], l.nodes()[j]) == d;
    return n;
}

bool regular(const OrbitLattice& l, std::size_t degree)
{
    for (std::size_t i = 0; i < l.node_count(); ++i)
        if (l.degree(i) != degree)
            return false;
    return true;
}

} // namespace

TEST_CASE("scheme (7,7)")
{
    const IntTable s = build_scheme(7);
    CHECK(s.rows() == std::vector<int>{7, 6, 5, 4, 3, 2, 1});
    CHECK(s.col_sums() == std::vector<Integer>{1, 3, 4, 3, 2, 1, 1});
    CHECK(s.total() == 15);
    CHECK(s.at(3, 3) == 2);
    CHECK(s.row_sums().front() == 1);
    CHECK(shape_of(scheme_matrix(7)) == ShapeTag::lower_unitriangular);
}

TEST_CASE("scheme sums for 13 and 14")
{
    CHECK(build_scheme(13).col_sums() == std::vector<Integer>{1, 6, 14, 18, 18, 14, 11, 7, 5, 3, 2, 1, 1});
    CHECK(build_scheme(14).col_sums() == std::vector<Integer>{1, 7, 16, 23, 23, 20, 15, 11, 7, 5, 3, 2, 1, 1});
}

TEST_CASE("scheme inverse")
{
    const IntMatrix inv = scheme_inverse(7);
    // Rows are m = 7..1, so m = 3 is row index 4.
    CHECK(inv.row(4) == (IntMatrix(1, 7) << 0, 2, -1, -1, 1, 0, 0).finished());
    CHECK(inv.row(5) == (IntMatrix(1, 7) << 0, -2, 2, 0, -1, 1, 0).finished());
    CHECK(scheme_inverse(1) == IntMatrix::Identity(1, 1));
    CHECK_THROWS_AS(build_scheme(0), std::invalid_argument);
}

TEST_CASE("property: schemes are symmetric and sum to p(M)")
{
    for (int m = 1; m <= 14; ++m) {
        const IntTable s = build_scheme(m);
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b) {
                REQUIRE(s.at(a, b) == s.at(b, a));
                REQUIRE(s.at(a, b) == oracle::count({.total = m, .exact_parts = b, .exact_max_part = a}));
            }
        REQUIRE(s.total() == p(m));
        for (int b = 1; b <= m; ++b)
            REQUIRE(s.col_sums()[static_cast<std::size_t>(b - 1)] == p_fixed_parts(b, m));
        REQUIRE(is_identity(multiply(scheme_matrix(m), scheme_inverse(m))));
    }
}

TEST_CASE("variant names")
{
    CHECK(parse_lattice_variant("unit-exchange") == LatticeVariant::unit_exchange);
    CHECK(parse_lattice_variant("subset_double_swap") == LatticeVariant::subset_double_swap);
    CHECK(variant_name(LatticeVariant::hypercube) == "hypercube");
    CHECK_THROWS_AS(parse_lattice_variant("torus"), std::invalid_argument);
}

TEST_CASE("unit-exchange lattice (7,7)")
{
    const OrbitLattice l = build_lattice(LatticeVariant::unit_exchange, {.total = 7, .parts = 7});
    CHECK(l.node_count() == 15);
    CHECK(l.labels().front() == "7000000");
    CHECK(l.labels().back() == "1111111");
    CHECK(l.adjacent(l.index_of("3310000"), l.index_of("3220000")));
    CHECK(l.adjacent(l.index_of(Partition::of({4, 3})), l.index_of(Partition::of({3, 3, 1}))));
    CHECK(l.edges() == unit_exchange_edges_by_scan(l));
    CHECK_THROWS_AS(l.index_of("8000000"), std::out_of_range);
}

TEST_CASE("unit-exchange edges move exactly one unit")
{
    for (int m = 1; m <= 10; ++m)
        for (int n = 1; n <= m; ++n) {
            const OrbitLattice l = build_lattice(LatticeVariant::unit_exchange, {.total = m, .parts = n});
            REQUIRE(l.node_count() == static_cast<std::size_t>(p_atmost(m, n)));
            std::set<OrbitLattice::Edge> seen;
            for (const auto& [a, b] : l.edges()) {
                REQUIRE(a < b);
                REQUIRE(seen.insert({a, b}).second);
                REQUIRE(l.nodes()[a] != l.nodes()[b]);
                REQUIRE(unit_exchange_adjacent(l.nodes()[a], l.nodes()[b]));
            }
            REQUIRE(l.edges() == unit_exchange_edges_by_scan(l));
        }
}

TEST_CASE("distances")
{
    const OrbitLattice ue = build_lattice(LatticeVariant::unit_exchange, {.total = 6, .parts = 3});
    const OrbitLattice sm = build_lattice(LatticeVariant::split_merge, {.total = 6, .parts = 3});
    const Partition a = Partition::of({3, 3});
    const Partition b = Partition::of({4, 1, 1});
    CHECK(distance(ue, a, b) == 2);
    CHECK(distance(sm, a, b) == 3);
    CHECK(distance(ue, "330", "330") == 0);
    CHECK_THROWS_AS(distance(ue, "330", "999"), std::out_of_range);

    // With a single one, two strings differ in exactly two places: no edges.
    const OrbitLattice split = build_lattice(LatticeVariant::subset_double_swap, {.bits = 4, .ones = 1});
    CHECK(split.edge_count() == 0);
    CHECK(distance(split, "0001", "1000") == kUnreachable);
}

TEST_CASE("split-merge lattice")
{
    const OrbitLattice l = build_lattice(LatticeVariant::split_merge, {.total = 6, .parts = 3});
    CHECK(l.adjacent(l.index_of("330"), l.index_of("600")));
    CHECK(l.adjacent(l.index_of("411"), l.index_of("510")));
    CHECK_FALSE(l.adjacent(l.index_of("330"), l.index_of("420")));
    for (const auto& [a, b] : l.edges()) {
        const auto nz = [&](std::size_t i) {
            return std::count_if(l.nodes()[i].begin(), l.nodes()[i].end(), [](int x) { return x > 0; });
        };
        REQUIRE(std::abs(nz(a) - nz(b)) == 1);
    }
}

TEST_CASE("subset swap graphs")
{
    const OrbitLattice swap = build_lattice(LatticeVariant::subset_swap, {.bits = 5, .ones = 3});
    CHECK(swap.node_count() == 10);
    CHECK(swap.edge_count() == 30);
    CHECK(regular(swap, 6));
    CHECK(swap.edge_count() == edges_at_hamming(swap, 2));

    for (int ones : {2, 3}) {
        const OrbitLattice petersen = build_lattice(LatticeVariant::subset_double_swap, {.bits = 5, .ones = ones});
        CHECK(petersen.node_count() == 10);
        CHECK(petersen.edge_count() == 15);
        CHECK(regular(petersen, 3));
        CHECK(petersen.edge_count() == edges_at_hamming(petersen, 4));
        // Petersen graph: no triangles and no 4-cycles, so girth 5.
        for (std::size_t a = 0; a < 10; ++a)
            for (std::size_t b = a + 1; b < 10; ++b) {
                std::size_t common = 0;
                for (std::size_t c : petersen.neighbors(a))
                    common += petersen.adjacent(b, c);
                REQUIRE(common == (petersen.adjacent(a, b) ? 0u : 1u));
            }
    }
}

TEST_CASE("hypercubes")
{
    for (int d = 0; d <= 8; ++d) {
        const OrbitLattice q = build_lattice(LatticeVariant::hypercube, {.bits = d});
        REQUIRE(q.node_count() == (std::size_t{1} << d));
        REQUIRE(q.edge_count() == (d == 0 ? 0 : static_cast<std::size_t>(d) << (d - 1)));
        REQUIRE(q.edge_count() == edges_at_hamming(q, 1));
    }
    const OrbitLattice q3 = build_lattice(LatticeVariant::hypercube, {.bits = 3});
    CHECK(q3.labels().front() == "000");
    CHECK(distance(q3, "000", "111") == 3);
}

TEST_CASE("size guards and parameter checks")
{
    CHECK_THROWS_AS(build_lattice(LatticeVariant::hypercube, {.bits = 21}), std::length_error);
    CHECK_THROWS_AS(build_lattice(LatticeVariant::unit_exchange, {.total = 80, .parts = 80}), std::length_error);
    CHECK_THROWS_AS(build_lattice(LatticeVariant::subset_swap, {.bits = 40, .ones = 20}), std::length_error);
    CHECK_THROWS_AS(build_lattice(LatticeVariant::unit_exchange, {.total = 5, .parts = 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_lattice(LatticeVariant::subset_swap, {.bits = 3, .ones = 4}), std::invalid_argument);
}

TEST_CASE("column edge counts")
{
    CHECK(column_edge_counts(2) == std::vector<Integer>{1});
    CHECK(column_edge_counts(4) == std::vector<Integer>{1, 2, 1});
    CHECK(column_edge_counts(7) == std::vector<Integer>{1, 5, 6, 4, 2, 1});
    CHECK(neighbor_difference_row(7) == std::vector<Integer>{0, 1, 2, 2, 1, 1});
    for (int m = 2; m <= 12; ++m) {
        const auto row = column_edge_counts(m);
        Integer s = 0;
        for (Integer x : row)
            s += x;
        REQUIRE(s == right_hand_neighbor_total(m));
    }
    CHECK_THROWS(column_edge_counts(1));
}

TEST_CASE("exports are deterministic")
{
    const OrbitLattice q = build_lattice(LatticeVariant::hypercube, {.bits = 2});
    CHECK(export_edges(q) == "00 -- 01\n00 -- 10\n01 -- 11\n10 -- 11\n");
    const std::string dot = export_dot(q);
    CHECK(dot.rfind("graph hypercube {\n", 0) == 0);
    CHECK(dot.find("  \"01\" -- \"11\";\n") != std::string::npos);
    CHECK(export_json(q) == export_json(build_lattice(LatticeVariant::hypercube, {.bits = 2})));
    CHECK(export_json(q).find("\"edges\":[[\"00\",\"01\"]") != std::string::npos);
}

TEST_CASE("property: random lattices have symmetric, loop-free adjacency")
{
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> variant(0, 4);
    for (int trial = 0; trial < 60; ++trial) {
        const auto v = static_cast<LatticeVariant>(variant(rng));
        LatticeParams params;
        if (v == LatticeVariant::unit_exchange || v == LatticeVariant::split_merge) {
            params.total = std::uniform_int_distribution<int>(0, 12)(rng);
            params.parts = std::uniform_int_distribution<int>(1, 8)(rng);
        } else {
            params.bits = std::uniform_int_distribution<int>(0, 9)(rng);
            params.ones = std::uniform_int_distribution<int>(0, params.bits)(rng);
        }
        const OrbitLattice l = build_lattice(v, params);
        for (std::size_t a = 0; a < l.node_count(); ++a)
            for (std::size_t b : l.neighbors(a)) {
                REQUIRE(a != b);
                REQUIRE(l.adjacent(b, a));
            }
        REQUIRE(std::is_sorted(l.edges().begin(), l.edges().end()));
    }
}
