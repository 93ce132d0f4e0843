#include "rr/bitio.hpp"

#include "rr/errors.hpp"

namespace rr {

std::vector<uint8_t> pack_bits(const Bits& bits) {
    std::vector<uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) bytes[i / 8] |= static_cast<uint8_t>(0x80u >> (i % 8));
    }
    return bytes;
}

Bits unpack_bits(const std::vector<uint8_t>& bytes, size_t count) {
    if (count > bytes.size() * 8) throw RangeError("unpack_bits: not enough bytes");
    Bits bits(count);
    for (size_t i = 0; i < count; ++i) {
        bits[i] = static_cast<uint8_t>((bytes[i / 8] >> (7 - i % 8)) & 1u);
    }
    return bits;
}

uint64_t bits_to_uint(const Bits& bits, size_t offset, size_t width) {
    if (offset + width > bits.size() || width > 64) {
        throw RangeError("bits_to_uint: window out of range");
    }
    uint64_t v = 0;
    for (size_t i = 0; i < width; ++i) v = (v << 1) | bits[offset + i];
    return v;
}

void append_uint(Bits& bits, uint64_t value, size_t width) {
    for (size_t i = width; i-- > 0;) {
        bits.push_back(static_cast<uint8_t>((value >> i) & 1u));
    }
}

BigInt bits_to_bigint(const Bits& bits, size_t offset, size_t width) {
    if (offset + width > bits.size()) throw RangeError("bits_to_bigint: window out of range");
    BigInt v = 0;
    for (size_t i = 0; i < width; ++i) {
        v <<= 1;
        if (bits[offset + i]) v |= 1;
    }
    return v;
}

void append_bigint(Bits& bits, const BigInt& value, size_t width) {
    if (value < 0 || value >> static_cast<unsigned>(width) != 0) {
        throw RangeError("append_bigint: value does not fit the width");
    }
    for (size_t i = width; i-- > 0;) {
        bits.push_back(static_cast<uint8_t>(
            boost::multiprecision::bit_test(value, static_cast<unsigned>(i)) ? 1 : 0));
    }
}

uint64_t BitRng::next_below(uint64_t bound) {
    if (bound == 0) throw RangeError("next_below: bound must be positive");
    if (bound == 1) return 0;
    unsigned width = 0;
    uint64_t top = bound - 1;
    while (top > 0) {
        ++width;
        top >>= 1;
    }
    for (;;) {
        uint64_t v = next_uint(width);
        if (v < bound) return v;
    }
}

} // namespace rr
