#include <doctest.h>

#include <set>
#include <stdexcept>

#include "partlat/oracle.hpp"

using namespace partlat;
using namespace partlat::oracle;

TEST_CASE("enumerate lists every partition once, largest first")
{
    const auto all = enumerate({.total = 5});
    REQUIRE(all.size() == 7);
    CHECK(all.front() == Partition::of({5}));
    CHECK(all.back() == Partition::of({1, 1, 1, 1, 1}));
    const std::set<Partition> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] > all[i]);
}

TEST_CASE("the empty partition")
{
    CHECK(count({.total = 0}) == 1);
    CHECK(count({.total = 0, .exact_parts = 0}) == 1);
    CHECK(count({.total = 0, .exact_parts = 1}) == 0);
}

TEST_CASE("constraint filters")
{
    CHECK(count({.total = 6, .exact_parts = 3}) == 3);
    CHECK(count({.total = 6, .max_parts = 3}) == 7);
    CHECK(count({.total = 6, .max_part = 3}) == 7);
    CHECK(count({.total = 6, .exact_parts = 3, .min_part = 2}) == 1);
    CHECK(count({.total = 8, .exact_parts = 3, .exact_max_part = 4}) == 2);
    CHECK(count({.total = 9, .parity = Parity::all_odd}) == 8);
    CHECK(count({.total = 9, .parity = Parity::all_even}) == 0);
    CHECK(count({.total = 9, .parity = Parity::mixed}) == 22);
    CHECK(count({.total = 10, .parity = Parity::distinct}) == 10);
    CHECK(count({.total = 6, .unit_count = 0}) == 4);
    CHECK(count({.total = 13, .layer = 7}) == 7);
    // Pure hooks: largest a with 7 - a ones.
    CHECK(count({.total = 7, .hook_frame = 7}) == 7);
}

TEST_CASE("validate rejects conflicting or oversize requests")
{
    CHECK_THROWS_AS(count({.total = -1}), std::invalid_argument);
    CHECK_THROWS_AS(count({.total = kMaxTotal + 1}), std::out_of_range);
    CHECK_THROWS_AS(count({.total = 5, .max_part = -1}), std::invalid_argument);
}

TEST_CASE("classify buckets add up to p(M)")
{
    const auto by_parts = classify({.total = 7}, Classifier::exact_parts);
    Integer total = 0;
    for (const auto& [key, n] : by_parts)
        total += n;
    CHECK(total == 15);
    CHECK(by_parts.at(2) == 3);

    const auto by_parity = classify({.total = 6}, Classifier::parity_class);
    CHECK(by_parity.at(kParityOdd) == 4);
    CHECK(by_parity.at(kParityEven) == 3);
    CHECK(by_parity.at(kParityMixed) == 4);

    const auto by_layer = classify({.total = 16}, Classifier::layer);
    CHECK(by_layer.at(10) == 1);
    CHECK(parse_classifier("largest_part") == Classifier::largest_part);
    CHECK_THROWS_AS(parse_classifier("colour"), std::invalid_argument);
}

TEST_CASE("satisfies agrees with enumerate")
{
    const ConstraintRecord c{.total = 10, .max_part = 4, .max_parts = 4};
    for (const auto& q : enumerate({.total = 10}))
        CHECK(satisfies(q, c) == (q.largest() <= 4 && q.nonzero_count() <= 4));
}
