#pragma once

#include <cstdint>
#include <vector>

namespace rr {

// 4-ary symbols are stored as their integer equivalents under the total order
// 0 < 1 < alpha < alpha^2; no field arithmetic is ever needed.
using Sym4 = uint8_t;
inline constexpr Sym4 kSymZero = 0;
inline constexpr Sym4 kSymOne = 1;
inline constexpr Sym4 kSymAlpha = 2;
inline constexpr Sym4 kSymAlphaSq = 3;

// Recursive alternate Gray mapping between charge levels {0..q-1} and p = log2(q)
// page bits. Built by reflect-and-flip: row 0 is all ones; rows 2^i..2^(i+1)-1
// mirror rows 2^i-1..0 with bit i (counted from the right) flipped. Immutable
// after construction; adjacent levels differ in exactly one bit.
class GrayMap {
public:
    explicit GrayMap(unsigned q);

    unsigned q() const { return q_; }
    unsigned pages() const { return pages_; }

    // Packed page bits for a level; bit k of the result is the page-k bit, and
    // page pages()-1 is the left-most page.
    unsigned level_to_bits(unsigned level) const;

    // Level whose row equals the packed bits (exact inverse of level_to_bits).
    unsigned bits_to_level(unsigned bits) const;

    // Single page bit of a level; page pages()-1 is the left-most page.
    int page_bit(unsigned level, unsigned page) const;

    // The left-most page bit is 0 exactly for levels in the upper half {q/2..q-1}.
    int leftmost_bit(unsigned level) const { return page_bit(level, pages_ - 1); }

private:
    unsigned q_;
    unsigned pages_;
    std::vector<unsigned> level_to_bits_;
    std::vector<unsigned> bits_to_level_;
};

// Mapping between the two left-most page bits and a 4-ary symbol:
// 11 <-> 0, 10 <-> 1, 00 <-> alpha, 01 <-> alpha^2.
Sym4 pair_to_sym4(int bit_hi, int bit_lo);
std::pair<int, int> sym4_to_pair(Sym4 s);

// Quarter bands of the level range: band 0 = {3q/4..q-1} (highest charge) down
// to band 3 = {0..q/4-1}. Symbol s occupies band (3 - s).
unsigned band_of_level(unsigned level, unsigned q);
unsigned band_of_sym4(Sym4 s);
Sym4 sym4_of_level(unsigned level, unsigned q);

} // namespace rr
