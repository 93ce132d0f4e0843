#pragma once

#include "rr/numeric.hpp"

namespace rr {

// Exact counts of admissible fixed-length words.
//
// binary(m): words over {0,1} of length m with no window x?x where both outer
// bits are 0. Satisfies N(m) = N(m-1) + N(m-3) + N(m-4).
//
// quaternary(m): words over the 4-symbol alphabet with none of the ten
// forbidden three-symbol windows. Satisfies
// N(m) = 3N(m-1) - 2N(m-2) + 9N(m-3) + 7N(m-4) + 6N(m-5) + 4N(m-6).
// The quaternary seed values below length 0 are fractional, so the table
// stores 32*N(m) as exact integers; quaternary_scaled exposes that view.
class CardinalityTable {
public:
    explicit CardinalityTable(unsigned max_m = 64);

    void extend(unsigned max_m);
    unsigned max_m() const { return max_m_; }

    // Defined for m >= -3; zero-length words count as 1.
    BigInt binary(int m) const;

    // Defined for m >= 0 (integer there); throws RangeError for negative m.
    BigInt quaternary(int m) const;

    // 32 * N(m), defined for m >= -5.
    BigInt quaternary_scaled(int m) const;

    // Widest s with 2^s <= binary(m) - 1, i.e. floor(log2(N(m) - 1)).
    // Requires m >= 1.
    unsigned binary_message_bits(unsigned m) const;

    // Widest s with 2^s <= quaternary(m) - 2. Requires m >= 1.
    unsigned quaternary_message_bits(unsigned m) const;

private:
    unsigned max_m_ = 0;
    std::vector<BigInt> n2_;        // n2_[i] = N(i - 3)
    std::vector<BigInt> n4_scaled_; // n4_scaled_[i] = 32 * N(i - 5)
};

} // namespace rr
