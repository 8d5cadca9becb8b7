#include <doctest.h>

#include "qcert/partitions.hpp"
#include "qcert/qproducts.hpp"

using namespace qcert;

TEST_CASE("a(2,5)(13) = 2 with the two partitions from the worked example") {
    const CountTable table = count_distinct_regular({2, 5}, 13);
    CHECK(table[13] == 2);
    CHECK(table[0] == 1);
    CHECK(table[1] == 1);

    const auto partitions = enumerate_distinct_regular({2, 5}, 13);
    REQUIRE(partitions.size() == 2);
    CHECK(partitions[0] == std::vector<std::int64_t>{13});
    CHECK(partitions[1] == std::vector<std::int64_t>{9, 3, 1});
}

TEST_CASE("enumeration edge cases") {
    // 2 is divisible by 2 and 1+1 is not distinct
    CHECK(enumerate_distinct_regular({2, 5}, 2).empty());
    // 4 is excluded for (4,9), leaving 3+1
    const auto p4 = enumerate_distinct_regular({4, 9}, 4);
    REQUIRE(p4.size() == 1);
    CHECK(p4[0] == std::vector<std::int64_t>{3, 1});
    // empty partition of 0
    const auto p0 = enumerate_distinct_regular({2, 5}, 0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    CHECK_THROWS_AS(enumerate_distinct_regular({2, 5}, 41), PreconditionError);
    CHECK_THROWS_AS(enumerate_distinct_regular({4, 6}, 10), PreconditionError);
    CHECK_THROWS_AS(count_distinct_regular({4, 6}, 10), PreconditionError);
}

TEST_CASE("enumeration cardinality equals the DP count") {
    for (const auto& [r, s] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 5}, {2, 7}, {4, 5}, {4, 9}, {3, 5}}) {
        const CountTable table = count_distinct_regular({r, s}, 30);
        for (std::int64_t n = 0; n <= 30; ++n) {
            const auto listed = enumerate_distinct_regular({r, s}, n);
            CHECK(BigInt(listed.size()) == table[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("p(n) small values and series agreement") {
    const CountTable p = count_partitions(500);
    const std::vector<std::int64_t> head = {1, 1, 2, 3, 5, 7};
    for (std::size_t n = 0; n < head.size(); ++n) CHECK(p[n] == head[n]);

    // p(500) needs more than 64 bits, so this also exercises the big-integer path
    const SeriesZ series = invert(euler(1, 501));
    for (std::int64_t n = 0; n <= 500; ++n) {
        CHECK(series.coeff(n) == p[static_cast<std::size_t>(n)]);
    }
    CHECK(p[500] > BigInt("18446744073709551615"));
}

TEST_CASE("Ramanujan congruences hold on the DP table") {
    const CountTable p = count_partitions(1000);
    for (std::int64_t n = 0; 5 * n + 4 <= 1000; ++n) CHECK(p[5 * n + 4] % 5 == 0);
    for (std::int64_t n = 0; 7 * n + 5 <= 1000; ++n) CHECK(p[7 * n + 5] % 7 == 0);
    for (std::int64_t n = 0; 11 * n + 6 <= 1000; ++n) CHECK(p[11 * n + 6] % 11 == 0);
}

TEST_CASE("2-regular counts match partitions into odd parts via f_2/f_1") {
    const CountTable b2 = count_lregular(2, 60);
    const SeriesZ series =
        eta_quotient(ProductSpec::eta({{2, 1}, {1, -1}}), 61, ExactRing{});
    for (std::int64_t n = 0; n <= 60; ++n) {
        CHECK(series.coeff(n) == b2[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("series coefficients equal DP counts up to 200") {
    for (const auto& [r, s] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 5}, {2, 7}, {4, 5}, {4, 9}, {3, 5}}) {
        const CountTable table = count_distinct_regular({r, s}, 200);
        const SeriesZ series = grs_generating(r, s, 201, ExactRing{});
        for (std::int64_t n = 0; n <= 200; ++n) {
            CHECK(series.coeff(n) == table[static_cast<std::size_t>(n)]);
        }
    }
}
