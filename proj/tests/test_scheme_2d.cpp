#include "doctest.h"

#include "rr/bitio.hpp"
#include "rr/constraints.hpp"
#include "rr/errors.hpp"
#include "rr/scheme_2d.hpp"

using namespace rr;

TEST_CASE("free positions follow the tile-parity rule") {
    for (size_t r = 0; r < 12; ++r) {
        for (size_t c = 0; c < 12; ++c) {
            CHECK(is_free_position(r, c) == ((r % 4 < 2) == (c % 4 < 2)));
        }
    }
    CHECK(is_free_position(0, 0));
    CHECK(!is_free_position(0, 2));
    CHECK(!is_free_position(2, 0));
    CHECK(is_free_position(2, 2));
    CHECK(is_free_position(0, 4));
    CHECK(is_free_position(5, 1));
}

TEST_CASE("free position count matches brute counting at every small size") {
    for (size_t rows = 1; rows <= 20; ++rows) {
        for (size_t cols = 1; cols <= 20; ++cols) {
            size_t brute = 0;
            for (size_t r = 0; r < rows; ++r) {
                for (size_t c = 0; c < cols; ++c) brute += is_free_position(r, c);
            }
            CHECK(free_position_count(rows, cols) == brute);
        }
    }
}

TEST_CASE("exactly half the positions are free on multiple-of-four sides") {
    for (size_t n : {4u, 8u, 16u, 32u}) {
        CHECK(free_position_count(n, n) == n * n / 2);
    }
    CHECK(free_position_count(4, 8) == 16);
}

TEST_CASE("encoding fills free positions row-major and forces the rest to one") {
    const size_t rows = 6, cols = 7;
    BitRng rng(21);
    const Bits message = rng.next_bits(free_position_count(rows, cols));
    const PagePlane plane = encode_plane(message, rows, cols);
    size_t next = 0;
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            if (is_free_position(r, c)) {
                CHECK(plane.at(r, c) == message[next++]);
            } else {
                CHECK(plane.at(r, c) == 1);
            }
        }
    }
    CHECK(next == message.size());
}

TEST_CASE("decode inverts encode with no integrity reports") {
    BitRng rng(22);
    for (size_t rows : {4u, 5u, 9u}) {
        for (size_t cols : {4u, 6u, 11u}) {
            const Bits message = rng.next_bits(free_position_count(rows, cols));
            const PlaneDecodeResult result = decode_plane(encode_plane(message, rows, cols));
            CHECK(result.message == message);
            CHECK(result.integrity.empty());
        }
    }
}

TEST_CASE("no plane carries an outer-zero window in either direction") {
    BitRng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Bits message = rng.next_bits(free_position_count(9, 13));
        const PagePlane plane = encode_plane(message, 9, 13);
        CHECK(scan_plane(plane, true, true).empty());
    }
}

TEST_CASE("a cleared forced position is reported, not decoded") {
    const size_t rows = 8, cols = 8;
    BitRng rng(24);
    const Bits message = rng.next_bits(free_position_count(rows, cols));
    PagePlane plane = encode_plane(message, rows, cols);
    REQUIRE(!is_free_position(0, 2));
    plane.set(0, 2, 0);
    const PlaneDecodeResult result = decode_plane(plane);
    CHECK(result.message == message);
    REQUIRE(result.integrity.size() == 1);
    CHECK(result.integrity[0].row == 0);
    CHECK(result.integrity[0].col == 2);
}

TEST_CASE("a flipped free position changes exactly one message bit") {
    const size_t rows = 8, cols = 8;
    BitRng rng(25);
    const Bits message = rng.next_bits(free_position_count(rows, cols));
    PagePlane plane = encode_plane(message, rows, cols);
    REQUIRE(is_free_position(4, 5));
    plane.set(4, 5, plane.at(4, 5) ^ 1);
    const PlaneDecodeResult result = decode_plane(plane);
    CHECK(result.integrity.empty());
    size_t differences = 0;
    REQUIRE(result.message.size() == message.size());
    for (size_t i = 0; i < message.size(); ++i) differences += result.message[i] != message[i];
    CHECK(differences == 1);
}

TEST_CASE("message size must match the free position count exactly") {
    CHECK_THROWS_AS(encode_plane(Bits(7, 0), 4, 4), RangeError);
    CHECK_THROWS_AS(encode_plane(Bits(9, 0), 4, 4), RangeError);
    CHECK_NOTHROW(encode_plane(Bits(8, 0), 4, 4));
}
