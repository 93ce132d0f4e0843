#include "doctest.h"

#include "rr/bitio.hpp"
#include "rr/errors.hpp"

using namespace rr;

TEST_CASE("pack_bits is most significant bit first") {
    const Bits bits{1, 0, 1, 0, 0, 1, 0, 1};
    const auto bytes = pack_bits(bits);
    REQUIRE(bytes.size() == 1);
    CHECK(bytes[0] == 0xA5);
}

TEST_CASE("pack_bits zero-pads the final partial byte on the right") {
    const Bits bits{1, 1, 1};
    const auto bytes = pack_bits(bits);
    REQUIRE(bytes.size() == 1);
    CHECK(bytes[0] == 0xE0);
}

TEST_CASE("pack and unpack round-trip at every length up to three bytes") {
    BitRng rng(1);
    for (size_t n = 0; n <= 24; ++n) {
        const Bits bits = rng.next_bits(n);
        CHECK(unpack_bits(pack_bits(bits), n) == bits);
    }
}

TEST_CASE("bits_to_uint reads big-endian fields at any offset") {
    const Bits bits{0, 1, 1, 0, 1, 0, 0, 1};
    CHECK(bits_to_uint(bits, 0, 8) == 0x69);
    CHECK(bits_to_uint(bits, 1, 3) == 0b110);
    CHECK(bits_to_uint(bits, 4, 4) == 0b1001);
    CHECK(bits_to_uint(bits, 3, 0) == 0);
}

TEST_CASE("append_uint is the inverse of bits_to_uint") {
    Bits bits;
    append_uint(bits, 0x1234, 16);
    append_uint(bits, 5, 3);
    REQUIRE(bits.size() == 19);
    CHECK(bits_to_uint(bits, 0, 16) == 0x1234);
    CHECK(bits_to_uint(bits, 16, 3) == 5);
}

TEST_CASE("bigint fields round-trip beyond 64 bits") {
    const BigInt value = (BigInt(1) << 90) + 12345;
    Bits bits;
    append_bigint(bits, value, 96);
    REQUIRE(bits.size() == 96);
    CHECK(bits_to_bigint(bits, 0, 96) == value);

    Bits offset_bits{1, 1, 1};
    append_bigint(offset_bits, value, 91);
    CHECK(bits_to_bigint(offset_bits, 3, 91) == value);
}

TEST_CASE("append_bigint rejects values that do not fit the width") {
    Bits bits;
    CHECK_THROWS_AS(append_bigint(bits, BigInt(4), 2), RangeError);
    CHECK_THROWS_AS(append_bigint(bits, BigInt(-1), 8), RangeError);
    CHECK_NOTHROW(append_bigint(bits, BigInt(3), 2));
}

TEST_CASE("bit source is deterministic per seed") {
    BitRng a(99), b(99), c(100);
    const Bits from_a = a.next_bits(256);
    const Bits from_b = b.next_bits(256);
    CHECK(from_a == from_b);
    CHECK(from_a != c.next_bits(256));
}

TEST_CASE("next_uint assembles the same bits next_bit would serve") {
    BitRng a(7), b(7);
    const uint64_t word = a.next_uint(20);
    uint64_t rebuilt = 0;
    for (int i = 0; i < 20; ++i) rebuilt = (rebuilt << 1) | static_cast<uint64_t>(b.next_bit());
    CHECK(word == rebuilt);
}

TEST_CASE("next_below stays within its bound and reaches every residue") {
    BitRng rng(3);
    std::vector<int> seen(5, 0);
    for (int i = 0; i < 2000; ++i) {
        const uint64_t v = rng.next_below(5);
        REQUIRE(v < 5);
        ++seen[static_cast<size_t>(v)];
    }
    for (int count : seen) CHECK(count > 0);
}
