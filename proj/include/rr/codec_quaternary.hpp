#pragma once

#include "rr/bitio.hpp"
#include "rr/cardinality.hpp"
#include "rr/gray_map.hpp"
#include "rr/policy.hpp"

namespace rr {

using Syms = std::vector<Sym4>;

// Rank codec for fixed-length 4-ary words avoiding the ten forbidden
// three-symbol windows. The codebook is the set of admissible words in
// ascending lexicographic order (symbol values 0 < 1 < alpha < alphaSq).
//
// Two ranks are reserved and never carry payload: rank 0 (the all-zeros
// word) and the rank of the all-ones word. Message values are shifted past
// them order-preservingly, so the widest payload is s bits with
// 2^s <= N(m) - 2.
//
// Stream framing: each codeword is followed by two bridge symbols drawn from
// {0, 1}. The bridges carry one message bit each (symbol value = bit value)
// and make every window that straddles codewords admissible, so a block
// carries s + 2 message bits in m + 2 symbols.
class QuaternaryCodec {
public:
    explicit QuaternaryCodec(unsigned m);

    unsigned m() const { return m_; }
    unsigned message_bits() const { return s_; }       // payload bits per codeword
    size_t bits_per_block() const { return s_ + 2u; }  // including bridge bits
    size_t block_syms() const { return m_ + 2u; }
    BigInt codebook_size() const;

    // Rank of the all-ones word; together with rank 0 these are the two
    // reserved ranks.
    const BigInt& reserved_rank() const { return reserved_; }

    bool is_admissible(const Syms& word) const;

    // Rank of an admissible word; throws ConstraintError otherwise.
    BigInt index_of(const Syms& word) const;

    // Rank computation without the admissibility check; total over all
    // symbol patterns. Used by lenient decoding.
    BigInt raw_index(const Syms& word) const;

    // Word at the given rank; throws RangeError unless 0 <= index < N(m).
    Syms codeword_of(const BigInt& index) const;

    // One summand of the rank: the number of admissible continuations that
    // place a smaller symbol at position i (counted from the right) given the
    // neighbor above, scaled by 32 to stay integral. prev < 0 means position
    // i is the leftmost symbol. Exposed for property tests.
    BigInt scaled_rank_term(unsigned symbol, int prev, unsigned i) const;

    // message.size() must be a multiple of bits_per_block(). Per chunk the
    // first message_bits() bits select the codeword and the final two bits
    // become the bridge symbols.
    Syms encode_stream(const Bits& message) const;

    // Inverse of encode_stream. Strict policy throws FramingError on a bridge
    // symbol outside {0, 1}, ConstraintError on an inadmissible or reserved
    // codeword and RangeError on a rank outside the message range. Lenient
    // policy clamps instead of throwing.
    Bits decode_stream(const Syms& lane, DecodePolicy policy = DecodePolicy::Strict) const;

private:
    BigInt rank(const Syms& word) const;
    Syms unrank(const BigInt& index) const;
    BigInt payload_to_rank(const BigInt& u) const;
    BigInt rank_to_payload(const BigInt& v, DecodePolicy policy) const;

    unsigned m_;
    unsigned s_;
    CardinalityTable table_;
    BigInt reserved_;
};

} // namespace rr
