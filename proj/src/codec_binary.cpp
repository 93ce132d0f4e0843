#include "rr/codec_binary.hpp"

#include "rr/errors.hpp"

namespace rr {

std::string to_string(DecodePolicy policy) {
    return policy == DecodePolicy::Strict ? "strict" : "lenient";
}

DecodePolicy decode_policy_from_string(const std::string& s) {
    if (s == "strict") return DecodePolicy::Strict;
    if (s == "lenient") return DecodePolicy::Lenient;
    throw ParseError("unknown decode policy: " + s);
}

BinaryCodec::BinaryCodec(unsigned m, bool complemented)
    : m_(m), complemented_(complemented), s_(0), table_(m) {
    if (m < 2) throw RangeError("codeword length must be at least 2");
    s_ = table_.binary_message_bits(m);
}

BigInt BinaryCodec::codebook_size() const { return table_.binary(static_cast<int>(m_)); }

bool BinaryCodec::is_admissible(const Bits& word) const {
    if (word.size() != m_) return false;
    const uint8_t bad = complemented_ ? 1 : 0;
    for (size_t j = 0; j + 2 < word.size(); ++j) {
        if (word[j] == bad && word[j + 2] == bad) return false;
    }
    return true;
}

// Rank in the straight codebook. The word is scanned by position i counted
// from the right; a set bit contributes the number of admissible words that
// share the prefix above i and have a 0 at i. The two continuation terms drop
// out when the already-fixed neighborhood forces the bit.
BigInt BinaryCodec::rank(const Bits& word) const {
    const unsigned m = m_;
    BigInt total = 0;
    for (unsigned i = 0; i < m; ++i) {
        if (word[m - 1 - i] == 0) continue;
        const bool upper_zero = i + 2 < m && word[m - 1 - (i + 2)] == 0;
        const bool next_zero = !upper_zero && i + 1 < m && word[m - 1 - (i + 1)] == 0;
        if (!upper_zero) {
            total += table_.binary(static_cast<int>(i) - 2);
            if (!next_zero) total += table_.binary(static_cast<int>(i) - 3);
        }
    }
    return total;
}

BigInt BinaryCodec::rank_complemented(const Bits& word) const {
    const unsigned m = m_;
    BigInt total = 0;
    for (unsigned i = 0; i < m; ++i) {
        if (word[m - 1 - i] == 0) continue;
        const unsigned prev = i + 1 < m ? word[m - 1 - (i + 1)] : 0;
        total += table_.binary(static_cast<int>(i) - static_cast<int>(prev));
    }
    return total;
}

BigInt BinaryCodec::index_of(const Bits& word) const {
    if (word.size() != m_) throw RangeError("word length mismatch");
    if (!is_admissible(word)) throw ConstraintError("word contains a forbidden window");
    return complemented_ ? rank_complemented(word) : rank(word);
}

BigInt BinaryCodec::raw_index(const Bits& word) const {
    if (word.size() != m_) throw RangeError("word length mismatch");
    return complemented_ ? rank_complemented(word) : rank(word);
}

Bits BinaryCodec::unrank(BigInt residual) const {
    const unsigned m = m_;
    Bits word(m, 0);
    for (unsigned ii = m; ii-- > 0;) {
        const unsigned i = ii;
        const bool upper_zero = i + 2 < m && word[m - 1 - (i + 2)] == 0;
        const bool next_zero = !upper_zero && i + 1 < m && word[m - 1 - (i + 1)] == 0;
        BigInt t = 0;
        if (!upper_zero) {
            t += table_.binary(static_cast<int>(i) - 2);
            if (!next_zero) t += table_.binary(static_cast<int>(i) - 3);
        }
        // A zero two above forces a 1 here; then t is 0 and the test passes.
        if (residual >= t) {
            word[m - 1 - i] = 1;
            residual -= t;
        }
    }
    if (residual != 0) throw RangeError("rank does not unrank cleanly");
    return word;
}

Bits BinaryCodec::unrank_complemented(BigInt residual) const {
    const unsigned m = m_;
    Bits word(m, 0);
    for (unsigned ii = m; ii-- > 0;) {
        const unsigned i = ii;
        if (i + 2 < m && word[m - 1 - (i + 2)] == 1) continue; // forced 0
        const unsigned prev = i + 1 < m ? word[m - 1 - (i + 1)] : 0;
        const BigInt t = table_.binary(static_cast<int>(i) - static_cast<int>(prev));
        if (residual >= t) {
            word[m - 1 - i] = 1;
            residual -= t;
        }
    }
    if (residual != 0) throw RangeError("rank does not unrank cleanly");
    return word;
}

Bits BinaryCodec::codeword_of(const BigInt& index) const {
    if (index < 0 || index >= codebook_size()) throw RangeError("rank outside the codebook");
    return complemented_ ? unrank_complemented(index) : unrank(index);
}

Bits BinaryCodec::encode_stream(const Bits& message) const {
    if (message.size() % s_ != 0) {
        throw RangeError("message length must be a multiple of the per-word payload");
    }
    // A straight lane is built first; the complemented lane is its flip.
    Bits lane;
    lane.reserve(message.size() / s_ * block_bits());
    for (size_t off = 0; off < message.size(); off += s_) {
        const BigInt u = bits_to_bigint(message, off, s_);
        const Bits word = unrank(u);
        lane.insert(lane.end(), word.begin(), word.end());
        lane.push_back(1);
        lane.push_back(1);
    }
    if (complemented_) {
        for (auto& b : lane) b ^= 1;
    }
    return lane;
}

Bits BinaryCodec::decode_stream(const Bits& lane, DecodePolicy policy) const {
    if (lane.size() % block_bits() != 0) {
        throw RangeError("lane length must be a multiple of the block size");
    }
    Bits work = lane;
    if (complemented_) {
        for (auto& b : work) b ^= 1;
    }
    const BigInt limit = BigInt(1) << s_;
    Bits message;
    message.reserve(work.size() / block_bits() * s_);
    for (size_t off = 0; off < work.size(); off += block_bits()) {
        if (policy == DecodePolicy::Strict) {
            if (work[off + m_] != 1 || work[off + m_ + 1] != 1) {
                throw FramingError("bridge bits are not set");
            }
        }
        Bits word(work.begin() + static_cast<ptrdiff_t>(off),
                  work.begin() + static_cast<ptrdiff_t>(off + m_));
        BigInt u;
        if (policy == DecodePolicy::Strict) {
            for (size_t j = 0; j + 2 < word.size(); ++j) {
                if (word[j] == 0 && word[j + 2] == 0) {
                    throw ConstraintError("codeword contains a forbidden window");
                }
            }
            u = rank(word);
            if (u >= limit) throw RangeError("rank outside the message range");
        } else {
            u = rank(word) % limit;
        }
        append_bigint(message, u, s_);
    }
    return message;
}

} // namespace rr
