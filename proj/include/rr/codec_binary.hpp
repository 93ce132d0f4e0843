#pragma once

#include "rr/bitio.hpp"
#include "rr/cardinality.hpp"
#include "rr/policy.hpp"

namespace rr {

// Rank codec for fixed-length binary words under a one-gap run constraint.
//
// Straight codebook: words with no window whose outer bits are both 0.
// Complemented codebook: words with no window whose outer bits are both 1.
// Either way the codebook is kept in ascending lexicographic order and
// codewords are exchanged with their positions (ranks) in that order, so no
// table is stored; ranks are computed from the cardinality recursion.
//
// Words are held as Bits with the most significant (leftmost) bit first.
//
// Stream framing: each codeword is followed by a two-bit bridge, 11 for the
// straight codebook. A complemented stream is the straight stream with every
// bit flipped (bridges become 00), which preserves the block layout while
// switching the protected window polarity.
class BinaryCodec {
public:
    explicit BinaryCodec(unsigned m, bool complemented = false);

    unsigned m() const { return m_; }
    bool complemented() const { return complemented_; }

    // Message bits carried per codeword: widest s with 2^s <= N(m) - 1.
    unsigned message_bits() const { return s_; }
    size_t block_bits() const { return m_ + 2u; }
    BigInt codebook_size() const;

    bool is_admissible(const Bits& word) const;

    // Rank of an admissible word in the codebook; throws ConstraintError on
    // an inadmissible word.
    BigInt index_of(const Bits& word) const;

    // The same rank computation with no admissibility check; defined for any
    // bit pattern. Used by lenient decoding.
    BigInt raw_index(const Bits& word) const;

    // Word at the given rank; throws RangeError unless 0 <= index < N(m).
    Bits codeword_of(const BigInt& index) const;

    // message.size() must be a multiple of message_bits(). Each chunk becomes
    // one codeword plus bridge; the lane length is a multiple of block_bits().
    Bits encode_stream(const Bits& message) const;

    // Inverse of encode_stream. Strict policy throws FramingError on a bad
    // bridge, ConstraintError on an inadmissible codeword and RangeError on a
    // rank outside the message range. Lenient policy ignores bridges and
    // reduces ranks modulo 2^message_bits().
    Bits decode_stream(const Bits& lane, DecodePolicy policy = DecodePolicy::Strict) const;

private:
    BigInt rank(const Bits& word) const;
    BigInt rank_complemented(const Bits& word) const;
    Bits unrank(BigInt residual) const;
    Bits unrank_complemented(BigInt residual) const;

    unsigned m_;
    bool complemented_;
    unsigned s_;
    CardinalityTable table_;
};

} // namespace rr
