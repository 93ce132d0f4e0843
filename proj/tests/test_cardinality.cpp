#include "doctest.h"

#include <cmath>

#include "rr/cardinality.hpp"
#include "rr/errors.hpp"
#include "rr/oracle.hpp"

using namespace rr;

TEST_CASE("binary counts match the reference sequence") {
    CardinalityTable table(21);
    const long long expected[] = {4,    6,    9,    15,   25,   40,   64,
                                  104,  169,  273,  441,  714,  1156, 1870,
                                  3025, 4895, 7921, 12816, 20736, 33552};
    for (int m = 2; m <= 21; ++m) {
        CHECK(table.binary(m) == BigInt(expected[m - 2]));
    }
}

TEST_CASE("quaternary counts match the reference sequence") {
    CardinalityTable table(10);
    const long long expected[] = {54, 177, 603, 2081, 7120, 24252, 82744, 282701};
    CHECK(table.quaternary(2) == 16);
    for (int m = 3; m <= 10; ++m) {
        CHECK(table.quaternary(m) == BigInt(expected[m - 3]));
    }
}

TEST_CASE("binary counts equal exhaustive enumeration") {
    CardinalityTable table(12);
    for (unsigned m = 1; m <= 12; ++m) {
        CHECK(table.binary(static_cast<int>(m)) ==
              BigInt(oracle::enumerate_binary(m).size()));
    }
}

TEST_CASE("quaternary counts equal exhaustive enumeration") {
    CardinalityTable table(9);
    for (unsigned m = 1; m <= 9; ++m) {
        CHECK(table.quaternary(static_cast<int>(m)) ==
              BigInt(oracle::enumerate_quaternary(m).size()));
    }
}

TEST_CASE("counts agree with the pair-state dynamic program at larger lengths") {
    CardinalityTable table(80);
    for (unsigned m : {20u, 40u, 80u}) {
        CHECK(table.binary(static_cast<int>(m)) == oracle::count_binary_words(m));
        CHECK(table.quaternary(static_cast<int>(m)) == oracle::count_quaternary_words(m));
    }
}

TEST_CASE("binary recursion holds across the table") {
    CardinalityTable table(100);
    for (int m = 1; m <= 100; ++m) {
        CHECK(table.binary(m) ==
              table.binary(m - 1) + table.binary(m - 3) + table.binary(m - 4));
    }
}

TEST_CASE("quaternary recursion holds on the scaled table") {
    CardinalityTable table(100);
    for (int m = 1; m <= 100; ++m) {
        const BigInt expected = 3 * table.quaternary_scaled(m - 1) -
                                2 * table.quaternary_scaled(m - 2) +
                                9 * table.quaternary_scaled(m - 3) +
                                7 * table.quaternary_scaled(m - 4) +
                                6 * table.quaternary_scaled(m - 5) +
                                4 * table.quaternary_scaled(m - 6);
        CHECK(table.quaternary_scaled(m) == expected);
    }
}

TEST_CASE("scaled quaternary values are whole multiples of 32 from length one") {
    CardinalityTable table(60);
    for (int m = 1; m <= 60; ++m) {
        CHECK(table.quaternary_scaled(m) == table.quaternary(m) << 5);
    }
}

TEST_CASE("message widths match the reference values") {
    CardinalityTable table(70);
    const std::pair<unsigned, unsigned> binary_cases[] = {
        {7, 5}, {10, 7}, {11, 8}, {14, 10}, {21, 15}, {34, 24}, {44, 31}, {70, 49}};
    for (const auto& [m, s] : binary_cases) CHECK(table.binary_message_bits(m) == s);
    const std::pair<unsigned, unsigned> quaternary_cases[] = {
        {5, 9}, {6, 11}, {10, 18}, {14, 25}, {18, 32}, {23, 41}};
    for (const auto& [m, s] : quaternary_cases) CHECK(table.quaternary_message_bits(m) == s);
}

TEST_CASE("message widths leave room for the reserved ranks") {
    CardinalityTable table(60);
    for (unsigned m = 2; m <= 60; ++m) {
        const BigInt b = BigInt(1) << table.binary_message_bits(m);
        CHECK(b <= table.binary(static_cast<int>(m)) - 1);
        CHECK(2 * b > table.binary(static_cast<int>(m)) - 1);
        const BigInt v = BigInt(1) << table.quaternary_message_bits(m);
        CHECK(v <= table.quaternary(static_cast<int>(m)) - 2);
        CHECK(2 * v > table.quaternary(static_cast<int>(m)) - 2);
    }
}

TEST_CASE("growth ratios approach the spectral radii") {
    CardinalityTable table(41);
    const double binary_ratio =
        static_cast<double>(table.binary(41)) / static_cast<double>(table.binary(40));
    CHECK(std::fabs(std::log2(binary_ratio) - 0.6942419) < 1e-3);
    const double quaternary_ratio = static_cast<double>(table.quaternary(41)) /
                                    static_cast<double>(table.quaternary(40));
    CHECK(std::fabs(quaternary_ratio - 3.414706838137) < 1e-3);
}

TEST_CASE("out-of-range lookups throw instead of reallocating") {
    CardinalityTable table(8);
    CHECK_THROWS_AS(table.binary(9), RangeError);
    CHECK_THROWS_AS(table.binary(-4), RangeError);
    CHECK_THROWS_AS(table.quaternary(-1), RangeError);
    CHECK_THROWS_AS(table.quaternary_scaled(-6), RangeError);
    table.extend(16);
    CHECK(table.max_m() == 16);
    CHECK_NOTHROW(table.binary(16));
}

TEST_CASE("seed values below length zero follow the recursions backwards") {
    CardinalityTable table(4);
    CHECK(table.binary(-3) == 0);
    CHECK(table.binary(-2) == 1);
    CHECK(table.binary(-1) == 1);
    CHECK(table.binary(0) == 1);
    CHECK(table.quaternary_scaled(-5) == 1);
    CHECK(table.quaternary_scaled(-4) == -2);
    CHECK(table.quaternary_scaled(-3) == 0);
    CHECK(table.quaternary_scaled(-2) == 8);
    CHECK(table.quaternary_scaled(-1) == 16);
    CHECK(table.quaternary_scaled(0) == 32);
    CHECK(table.quaternary(0) == 1);
}
