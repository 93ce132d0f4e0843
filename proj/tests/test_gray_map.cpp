#include "doctest.h"

#include "rr/errors.hpp"
#include "rr/gray_map.hpp"

using namespace rr;

TEST_CASE("eight-level map matches the reference assignment") {
    GrayMap map(8);
    const unsigned expected[] = {0b111, 0b110, 0b100, 0b101, 0b001, 0b000, 0b010, 0b011};
    for (unsigned level = 0; level < 8; ++level) {
        CHECK(map.level_to_bits(level) == expected[level]);
        CHECK(map.bits_to_level(expected[level]) == level);
    }
}

TEST_CASE("four-level map matches the reference assignment") {
    GrayMap map(4);
    const unsigned expected[] = {0b11, 0b10, 0b00, 0b01};
    for (unsigned level = 0; level < 4; ++level) {
        CHECK(map.level_to_bits(level) == expected[level]);
    }
}

TEST_CASE("map equals the complemented reflected binary code") {
    for (unsigned q : {4u, 8u, 16u, 32u, 64u}) {
        GrayMap map(q);
        for (unsigned n = 0; n < q; ++n) {
            CHECK(map.level_to_bits(n) == (~(n ^ (n >> 1)) & (q - 1)));
        }
    }
}

TEST_CASE("adjacent levels differ in exactly one page bit") {
    for (unsigned q : {4u, 8u, 16u, 32u}) {
        GrayMap map(q);
        for (unsigned n = 1; n < q; ++n) {
            const unsigned diff = map.level_to_bits(n) ^ map.level_to_bits(n - 1);
            CHECK(diff != 0);
            CHECK((diff & (diff - 1)) == 0);
        }
    }
}

TEST_CASE("bits_to_level inverts level_to_bits on all of both domains") {
    for (unsigned q : {4u, 8u, 16u}) {
        GrayMap map(q);
        std::vector<bool> hit(q, false);
        for (unsigned n = 0; n < q; ++n) {
            const unsigned bits = map.level_to_bits(n);
            REQUIRE(bits < q);
            CHECK(!hit[bits]);
            hit[bits] = true;
            CHECK(map.bits_to_level(bits) == n);
        }
    }
}

TEST_CASE("leftmost page bit is zero exactly on the upper half") {
    for (unsigned q : {4u, 8u, 16u, 32u}) {
        GrayMap map(q);
        for (unsigned n = 0; n < q; ++n) {
            CHECK((map.leftmost_bit(n) == 0) == (n >= q / 2));
        }
    }
}

TEST_CASE("page_bit decomposes level_to_bits") {
    GrayMap map(16);
    for (unsigned n = 0; n < 16; ++n) {
        unsigned rebuilt = 0;
        for (unsigned page = 0; page < map.pages(); ++page) {
            rebuilt |= static_cast<unsigned>(map.page_bit(n, page)) << page;
        }
        CHECK(rebuilt == map.level_to_bits(n));
    }
}

TEST_CASE("pair mapping follows the two-page code") {
    CHECK(pair_to_sym4(1, 1) == kSymZero);
    CHECK(pair_to_sym4(1, 0) == kSymOne);
    CHECK(pair_to_sym4(0, 0) == kSymAlpha);
    CHECK(pair_to_sym4(0, 1) == kSymAlphaSq);
    for (Sym4 s : {kSymZero, kSymOne, kSymAlpha, kSymAlphaSq}) {
        const auto [hi, lo] = sym4_to_pair(s);
        CHECK(pair_to_sym4(hi, lo) == s);
    }
}

TEST_CASE("bands quarter the level range from the top") {
    for (unsigned q : {8u, 16u, 32u}) {
        for (unsigned level = 0; level < q; ++level) {
            CHECK(band_of_level(level, q) == 3 - level / (q / 4));
        }
    }
}

TEST_CASE("symbol of a level lands in the matching band") {
    for (unsigned q : {8u, 16u}) {
        for (unsigned level = 0; level < q; ++level) {
            CHECK(band_of_sym4(sym4_of_level(level, q)) == band_of_level(level, q));
        }
    }
}

TEST_CASE("symbol of a level agrees with the top two page bits") {
    for (unsigned q : {8u, 16u, 32u}) {
        GrayMap map(q);
        for (unsigned level = 0; level < q; ++level) {
            const Sym4 s = sym4_of_level(level, q);
            const auto [hi, lo] = sym4_to_pair(s);
            CHECK(hi == map.page_bit(level, map.pages() - 1));
            CHECK(lo == map.page_bit(level, map.pages() - 2));
        }
    }
}

TEST_CASE("level counts that are not powers of two at least four are rejected") {
    for (unsigned q : {0u, 1u, 2u, 3u, 6u, 12u}) {
        CHECK_THROWS_AS(GrayMap{q}, RangeError);
    }
}
