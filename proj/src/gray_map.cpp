#include "rr/gray_map.hpp"

#include "rr/errors.hpp"

namespace rr {

namespace {

bool is_power_of_two(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

GrayMap::GrayMap(unsigned q) : q_(q) {
    if (!is_power_of_two(q) || q < 4) {
        throw RangeError("GrayMap requires q to be a power of 2 with q >= 4");
    }
    pages_ = 0;
    for (unsigned v = q; v > 1; v >>= 1) ++pages_;

    level_to_bits_.assign(q, 0);
    level_to_bits_[0] = q - 1; // all ones
    for (unsigned i = 0; i < pages_; ++i) {
        for (unsigned j = 0; j < (1u << i); ++j) {
            level_to_bits_[(1u << i) + j] = level_to_bits_[(1u << i) - 1 - j] ^ (1u << i);
        }
    }
    bits_to_level_.assign(q, 0);
    for (unsigned level = 0; level < q; ++level) {
        bits_to_level_[level_to_bits_[level]] = level;
    }
}

unsigned GrayMap::level_to_bits(unsigned level) const {
    if (level >= q_) throw RangeError("level out of range");
    return level_to_bits_[level];
}

unsigned GrayMap::bits_to_level(unsigned bits) const {
    if (bits >= q_) throw RangeError("bit pattern out of range");
    return bits_to_level_[bits];
}

int GrayMap::page_bit(unsigned level, unsigned page) const {
    if (page >= pages_) throw RangeError("page out of range");
    return static_cast<int>((level_to_bits(level) >> page) & 1u);
}

Sym4 pair_to_sym4(int bit_hi, int bit_lo) {
    // 11 -> 0, 10 -> 1, 00 -> alpha, 01 -> alpha^2
    if (bit_hi) return bit_lo ? kSymZero : kSymOne;
    return bit_lo ? kSymAlphaSq : kSymAlpha;
}

std::pair<int, int> sym4_to_pair(Sym4 s) {
    switch (s) {
        case kSymZero: return {1, 1};
        case kSymOne: return {1, 0};
        case kSymAlpha: return {0, 0};
        case kSymAlphaSq: return {0, 1};
        default: throw RangeError("invalid 4-ary symbol");
    }
}

unsigned band_of_level(unsigned level, unsigned q) {
    if (!is_power_of_two(q) || q < 4 || level >= q) {
        throw RangeError("band_of_level: invalid level or q");
    }
    return 3 - level / (q / 4);
}

unsigned band_of_sym4(Sym4 s) {
    if (s > 3) throw RangeError("invalid 4-ary symbol");
    return 3u - s;
}

Sym4 sym4_of_level(unsigned level, unsigned q) {
    return static_cast<Sym4>(3 - band_of_level(level, q));
}

} // namespace rr
