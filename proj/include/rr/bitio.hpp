#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rr/numeric.hpp"

namespace rr {

// Bits are held one per byte (0 or 1); "first" always means most significant.
using Bits = std::vector<uint8_t>;

// Packs bits most-significant-bit-first into bytes; the final partial byte is
// zero-padded on the right.
std::vector<uint8_t> pack_bits(const Bits& bits);

// Unpacks `count` bits (most-significant-bit-first) from a byte sequence.
Bits unpack_bits(const std::vector<uint8_t>& bytes, size_t count);

// Reads an unsigned big-endian value from bits[offset .. offset+width).
uint64_t bits_to_uint(const Bits& bits, size_t offset, size_t width);

// Appends `width` bits of `value`, most significant first.
void append_uint(Bits& bits, uint64_t value, size_t width);

// Arbitrary-width counterparts for payload chunks wider than 64 bits.
BigInt bits_to_bigint(const Bits& bits, size_t offset, size_t width);
void append_bigint(Bits& bits, const BigInt& value, size_t width);

// Deterministic, portable bit source: draws 64-bit words from std::mt19937_64
// and serves their bits most significant first. Identical output on every
// platform for a given seed.
class BitRng {
public:
    explicit BitRng(uint64_t seed) : engine_(seed) {}

    int next_bit() {
        if (available_ == 0) {
            word_ = engine_();
            available_ = 64;
        }
        --available_;
        return static_cast<int>((word_ >> available_) & 1u);
    }

    uint64_t next_uint(unsigned width) {
        uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i) v = (v << 1) | static_cast<uint64_t>(next_bit());
        return v;
    }

    Bits next_bits(size_t count) {
        Bits out(count);
        for (size_t i = 0; i < count; ++i) out[i] = static_cast<uint8_t>(next_bit());
        return out;
    }

    // Uniform integer in [0, bound) via rejection sampling on next_uint.
    uint64_t next_below(uint64_t bound);

private:
    std::mt19937_64 engine_;
    uint64_t word_ = 0;
    unsigned available_ = 0;
};

} // namespace rr
