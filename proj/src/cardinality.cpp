#include "rr/cardinality.hpp"

#include "rr/errors.hpp"

namespace rr {

CardinalityTable::CardinalityTable(unsigned max_m) {
    n2_ = {0, 1, 1, 1};              // N(-3), N(-2), N(-1), N(0)
    n4_scaled_ = {1, -2, 0, 8, 16, 32}; // 32*N(m) for m = -5..0
    extend(max_m);
}

void CardinalityTable::extend(unsigned max_m) {
    // n2_[i] holds N(i - 3); grow until i = max_m + 3.
    while (n2_.size() < static_cast<size_t>(max_m) + 4) {
        const size_t i = n2_.size();
        n2_.push_back(n2_[i - 1] + n2_[i - 3] + n2_[i - 4]);
    }
    // n4_scaled_[i] holds 32*N(i - 5); grow until i = max_m + 5.
    while (n4_scaled_.size() < static_cast<size_t>(max_m) + 6) {
        const size_t i = n4_scaled_.size();
        n4_scaled_.push_back(3 * n4_scaled_[i - 1] - 2 * n4_scaled_[i - 2] +
                             9 * n4_scaled_[i - 3] + 7 * n4_scaled_[i - 4] +
                             6 * n4_scaled_[i - 5] + 4 * n4_scaled_[i - 6]);
    }
    if (max_m > max_m_) max_m_ = max_m;
}

BigInt CardinalityTable::binary(int m) const {
    if (m < -3 || m > static_cast<int>(max_m_)) throw RangeError("length out of table range");
    return n2_[static_cast<size_t>(m + 3)];
}

BigInt CardinalityTable::quaternary(int m) const {
    if (m < 0) throw RangeError("quaternary count is fractional below length 0");
    const BigInt scaled = quaternary_scaled(m);
    return scaled >> 5;
}

BigInt CardinalityTable::quaternary_scaled(int m) const {
    if (m < -5 || m > static_cast<int>(max_m_)) throw RangeError("length out of table range");
    return n4_scaled_[static_cast<size_t>(m + 5)];
}

unsigned CardinalityTable::binary_message_bits(unsigned m) const {
    if (m < 1) throw RangeError("message width needs length >= 1");
    return floor_log2(binary(static_cast<int>(m)) - 1);
}

unsigned CardinalityTable::quaternary_message_bits(unsigned m) const {
    if (m < 1) throw RangeError("message width needs length >= 1");
    return floor_log2(quaternary(static_cast<int>(m)) - 2);
}

} // namespace rr
