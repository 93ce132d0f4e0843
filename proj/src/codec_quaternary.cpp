#include "rr/codec_quaternary.hpp"

#include "rr/constraints.hpp"
#include "rr/errors.hpp"

namespace rr {

QuaternaryCodec::QuaternaryCodec(unsigned m) : m_(m), s_(0), table_(m) {
    if (m < 2) throw RangeError("codeword length must be at least 2");
    s_ = table_.quaternary_message_bits(m);
    reserved_ = 0;
    for (unsigned i = 0; i < m; ++i) reserved_ += table_.quaternary(static_cast<int>(i));
}

BigInt QuaternaryCodec::codebook_size() const {
    return table_.quaternary(static_cast<int>(m_));
}

bool QuaternaryCodec::is_admissible(const Syms& word) const {
    if (word.size() != m_) return false;
    for (size_t j = 0; j + 2 < word.size(); ++j) {
        if (is_forbidden_sym4_triple(word[j], word[j + 1], word[j + 2])) return false;
    }
    return true;
}

BigInt QuaternaryCodec::scaled_rank_term(unsigned symbol, int prev, unsigned i) const {
    const int ii = static_cast<int>(i);
    auto n = [&](int j) { return table_.quaternary_scaled(j); };
    switch (symbol) {
        case 0:
            return 0;
        case 1:
        case 2:
            if (prev <= 1) return symbol * n(ii);
            return 2 * symbol * n(ii - 1);
        case 3:
            if (prev <= 1) return 3 * n(ii) - 2 * n(ii - 1) + 4 * n(ii - 2);
            if (prev == 2) return n(ii) + 2 * n(ii - 1) + 4 * n(ii - 2);
            return 5 * n(ii - 1) + 2 * n(ii - 2) + 4 * n(ii - 3);
        default:
            throw RangeError("symbol out of range");
    }
}

BigInt QuaternaryCodec::rank(const Syms& word) const {
    BigInt scaled = 0;
    for (unsigned i = 0; i < m_; ++i) {
        const unsigned v = word[m_ - 1 - i];
        const int prev = i + 1 < m_ ? static_cast<int>(word[m_ - 1 - (i + 1)]) : -1;
        scaled += scaled_rank_term(v, prev, i);
    }
    if ((scaled & 31) != 0) throw RangeError("rank terms lost integrality");
    return scaled >> 5;
}

BigInt QuaternaryCodec::index_of(const Syms& word) const {
    if (word.size() != m_) throw RangeError("word length mismatch");
    if (!is_admissible(word)) throw ConstraintError("word contains a forbidden window");
    return rank(word);
}

BigInt QuaternaryCodec::raw_index(const Syms& word) const {
    if (word.size() != m_) throw RangeError("word length mismatch");
    return rank(word);
}

Syms QuaternaryCodec::unrank(const BigInt& index) const {
    Syms word(m_, kSymZero);
    BigInt residual = index << 5;
    for (unsigned ii = m_; ii-- > 0;) {
        const unsigned i = ii;
        const int prev = i + 1 < m_ ? static_cast<int>(word[m_ - 1 - (i + 1)]) : -1;
        for (unsigned v = 3; v >= 1; --v) {
            if (i + 2 < m_ &&
                is_forbidden_sym4_triple(word[m_ - 1 - (i + 2)], word[m_ - 1 - (i + 1)],
                                         static_cast<Sym4>(v))) {
                continue;
            }
            const BigInt t = scaled_rank_term(v, prev, i);
            if (t <= residual) {
                word[m_ - 1 - i] = static_cast<Sym4>(v);
                residual -= t;
                break;
            }
        }
        // Symbol 0 is admissible after any context and contributes nothing.
    }
    if (residual != 0) throw RangeError("rank does not unrank cleanly");
    return word;
}

Syms QuaternaryCodec::codeword_of(const BigInt& index) const {
    if (index < 0 || index >= codebook_size()) throw RangeError("rank outside the codebook");
    return unrank(index);
}

BigInt QuaternaryCodec::payload_to_rank(const BigInt& u) const {
    BigInt v = u + 1;
    if (v >= reserved_) ++v;
    return v;
}

BigInt QuaternaryCodec::rank_to_payload(const BigInt& v, DecodePolicy policy) const {
    if (policy == DecodePolicy::Strict && (v == 0 || v == reserved_)) {
        throw ConstraintError("reserved codeword carries no payload");
    }
    BigInt u = v < reserved_ ? v - 1 : v - 2;
    if (u < 0) u = 0; // lenient only; strict already rejected rank 0
    return u;
}

Syms QuaternaryCodec::encode_stream(const Bits& message) const {
    if (message.size() % bits_per_block() != 0) {
        throw RangeError("message length must be a multiple of the per-block payload");
    }
    Syms lane;
    lane.reserve(message.size() / bits_per_block() * block_syms());
    for (size_t off = 0; off < message.size(); off += bits_per_block()) {
        const BigInt u = bits_to_bigint(message, off, s_);
        const Syms word = unrank(payload_to_rank(u));
        lane.insert(lane.end(), word.begin(), word.end());
        lane.push_back(message[off + s_] ? kSymOne : kSymZero);
        lane.push_back(message[off + s_ + 1] ? kSymOne : kSymZero);
    }
    return lane;
}

Bits QuaternaryCodec::decode_stream(const Syms& lane, DecodePolicy policy) const {
    if (lane.size() % block_syms() != 0) {
        throw RangeError("lane length must be a multiple of the block size");
    }
    const BigInt limit = BigInt(1) << s_;
    Bits message;
    message.reserve(lane.size() / block_syms() * bits_per_block());
    for (size_t off = 0; off < lane.size(); off += block_syms()) {
        const Syms word(lane.begin() + static_cast<ptrdiff_t>(off),
                        lane.begin() + static_cast<ptrdiff_t>(off + m_));
        const Sym4 b1 = lane[off + m_];
        const Sym4 b2 = lane[off + m_ + 1];
        BigInt u;
        if (policy == DecodePolicy::Strict) {
            if (b1 > kSymOne || b2 > kSymOne) {
                throw FramingError("bridge symbol outside the bridge alphabet");
            }
            const BigInt v = index_of(word);
            u = rank_to_payload(v, policy);
            if (u >= limit) throw RangeError("rank outside the message range");
        } else {
            const BigInt v = raw_index(word);
            u = rank_to_payload(v, policy) % limit;
        }
        append_bigint(message, u, s_);
        message.push_back(static_cast<uint8_t>(b1 & 1u));
        message.push_back(static_cast<uint8_t>(b2 & 1u));
    }
    return message;
}

} // namespace rr
